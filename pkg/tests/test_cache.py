import json
import logging

from hyperfields import build_quotient
from hyperfields.cache import QuotientCache, cache_lookup, cache_store


def test_store_then_lookup(tmp_path):
    T = build_quotient(7, 3)
    cache_store(7, 3, T, directory=tmp_path)
    found = cache_lookup(7, 3, directory=tmp_path)
    assert found == T
    assert found.to_json() == T.to_json()


def test_miss(tmp_path):
    assert cache_lookup(9999991, 2, directory=tmp_path) is None
    cache_store(7, 3, build_quotient(7, 3), directory=tmp_path)
    assert cache_lookup(9999991, 2, directory=tmp_path) is None


def test_records_are_json_lines(tmp_path):
    cache = QuotientCache(tmp_path)
    cache.store(5, 2, build_quotient(5, 2))
    cache.store(7, 2, build_quotient(7, 2))
    lines = cache.path.read_text(encoding="utf-8").splitlines()
    assert [json.loads(ln)["q"] for ln in lines] == [5, 7]
    assert set(json.loads(lines[0])) == {"q", "r", "table"}


def test_env_var_sets_directory(tmp_path, monkeypatch):
    monkeypatch.setenv("HYPERFIELD_CACHE_DIR", str(tmp_path))
    QuotientCache().get_or_build(13, 4)
    assert (tmp_path / "quotients.jsonl").exists()


def test_corrupt_line_is_skipped(tmp_path, caplog):
    cache = QuotientCache(tmp_path)
    cache.directory.mkdir(exist_ok=True)
    cache.path.write_text("{not json\n", encoding="utf-8")
    cache.store(7, 3, build_quotient(7, 3))
    with caplog.at_level(logging.WARNING):
        assert cache.lookup(7, 3) == build_quotient(7, 3)
    assert "corrupt" in caplog.text


def test_tampered_row_triggers_recompute(tmp_path, caplog):
    cache = QuotientCache(tmp_path)
    good = build_quotient(7, 3)
    cache.store(7, 3, good)
    record = json.loads(cache.path.read_text(encoding="utf-8"))
    record["table"]["rows"][0] = [1]  # 1 ⊞ 1 = {1} breaks the axioms here
    cache.path.write_text(json.dumps(record) + "\n", encoding="utf-8")
    with caplog.at_level(logging.WARNING):
        assert cache.lookup(7, 3) is None
        assert cache.get_or_build(7, 3) == good
    assert "fails the axioms" in caplog.text
    assert cache.lookup(7, 3) == good


def test_valid_but_wrong_entry_caught_by_verify(tmp_path, caplog):
    cache = QuotientCache(tmp_path)
    # F_9/G^2 is a valid hyperfield but not F_5/G^2
    cache.store(5, 2, build_quotient(9, 2))
    with caplog.at_level(logging.WARNING):
        assert cache.lookup(5, 2, verify=True) is None
    assert "differs" in caplog.text
    assert cache.get_or_build(5, 2, verify=True) == build_quotient(5, 2)
