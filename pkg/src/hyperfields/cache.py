"""Append-only JSON-lines cache of quotient tables keyed by (q, r)."""

from __future__ import annotations

import json
import logging
import os
from pathlib import Path
from typing import Optional

from .errors import MalformedTable
from .hyperfield import HyperfieldTable, check_axioms
from .quotient import build_quotient

log = logging.getLogger(__name__)

CACHE_ENV = "HYPERFIELD_CACHE_DIR"
CACHE_FILE = "quotients.jsonl"


def default_cache_dir() -> Path:
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    return Path(os.environ.get("XDG_CACHE_HOME", Path.home() / ".cache")) / "hyperfields"


class QuotientCache:
    def __init__(self, directory: Optional[os.PathLike] = None):
        self.directory = Path(directory) if directory is not None else default_cache_dir()
        self.path = self.directory / CACHE_FILE

    def _records(self):
        if not self.path.exists():
            return
        with open(self.path, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, 1):
                if not line.strip():
                    continue
                try:
                    record = json.loads(line)
                    key = (int(record["q"]), int(record["r"]))
                    table = HyperfieldTable.from_dict(record["table"])
                except (ValueError, KeyError, TypeError, MalformedTable) as exc:
                    log.warning("skipping corrupt cache line %s:%d (%s)", self.path, lineno, exc)
                    continue
                yield lineno, key, table

    def lookup(self, q: int, r: int, *, verify: bool = False) -> Optional[HyperfieldTable]:
        """Latest trustworthy entry for (q, r), or None.

        Entries failing the axiom check are skipped.  With ``verify`` the
        entry is also compared against a fresh construction.
        """
        found = None
        for lineno, key, table in self._records():
            if key != (q, r):
                continue
            if not check_axioms(table).ok:
                log.warning("cache entry for q=%d r=%d at line %d fails the axioms", q, r, lineno)
                continue
            found = table
        if found is not None and verify and found != build_quotient(q, r):
            log.warning("cache entry for q=%d r=%d differs from a fresh build", q, r)
            return None
        return found

    def store(self, q: int, r: int, table: HyperfieldTable) -> None:
        self.directory.mkdir(parents=True, exist_ok=True)
        record = {"q": q, "r": r, "table": table.to_dict()}
        with open(self.path, "a", encoding="utf-8") as fh:
            fh.write(json.dumps(record, separators=(",", ":")) + "\n")

    def get_or_build(self, q: int, r: int, *, verify: bool = False) -> HyperfieldTable:
        table = self.lookup(q, r, verify=verify)
        if table is None:
            table = build_quotient(q, r)
            self.store(q, r, table)
        return table


def cache_lookup(q: int, r: int, directory=None, verify: bool = False) -> Optional[HyperfieldTable]:
    return QuotientCache(directory).lookup(q, r, verify=verify)


def cache_store(q: int, r: int, table: HyperfieldTable, directory=None) -> None:
    QuotientCache(directory).store(q, r, table)
