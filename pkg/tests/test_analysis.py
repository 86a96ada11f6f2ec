import itertools
from decimal import Decimal, getcontext

import pytest

from golden import ORDER3, ORDER4
from hyperfields import (
    IndexDoesNotDivide,
    Obstruction,
    ZeroCoefficient,
    build_Hr,
    build_Hr_prime,
    build_quotient,
    build_valuation_quotient,
    canonical_id,
    check_weil_bound,
    classify_quotients,
    count_diagonal_curve_points,
    embed_field,
    full_table,
    gf_build,
    iso_map,
    nr_bound,
    signs,
    stabilization_scan,
)
from hyperfields.analysis import FINITE, INFINITE, NOT_QUOTIENT, expected_stable_class, weil_sweep
from hyperfields.gf import prime_powers_upto


def decimal_nr_bound(r):
    getcontext().prec = 60
    N = 1
    while Decimal(N + 1) - (r - 1) * (r - 2) * Decimal(N).sqrt() - 3 * r <= 0:
        N += 1
    return N


def brute_points(q, r, a, b, c):
    """Affine solutions in F_q^3 minus the origin, divided by q - 1."""
    F = gf_build(q)
    affine = 0
    for x, y, z in itertools.product(range(q), repeat=3):
        if (x, y, z) == (0, 0, 0):
            continue
        lhs = F.add(F.add(F.mul(a, F.pow(x, r)), F.mul(b, F.pow(y, r))), F.mul(c, F.pow(z, r)))
        affine += lhs == 0
    assert affine % (q - 1) == 0
    return affine // (q - 1)


def ids(tables):
    return {canonical_id(T) for T in tables}


# -- N_r ---------------------------------------------------------------------------


def test_nr_bound_examples():
    assert nr_bound(2) == 6
    assert nr_bound(3) == 17
    assert nr_bound(4) == 56


@pytest.mark.parametrize("r", range(1, 17))
def test_nr_bound_matches_decimal_oracle(r):
    assert nr_bound(r) == decimal_nr_bound(r)
    if r >= 2:
        assert nr_bound(r) <= r ** 4


def test_nr_bound_rejects_nonpositive():
    with pytest.raises(ValueError):
        nr_bound(0)


# -- point counts ------------------------------------------------------------------


def test_point_count_examples():
    assert count_diagonal_curve_points(7, 1, 1, 1, 1) == 8
    F5 = gf_build(5)
    assert count_diagonal_curve_points(5, 2, 1, 1, F5.neg(1)) == 6
    M = count_diagonal_curve_points(13, 3, 1, 1, 1)
    assert (M - 14) ** 2 <= 4 * 13
    assert check_weil_bound(4, 3, 1, 1, 1)
    assert count_diagonal_curve_points(4, 3, 1, 1, 1) == brute_points(4, 3, 1, 1, 1)


@pytest.mark.parametrize("q", [3, 4, 5, 7, 8, 9, 13, 16, 19])
def test_point_counts_match_brute_force(q):
    F = gf_build(q)
    for r in range(1, q):
        if (q - 1) % r:
            continue
        for k in range(min(r, 3)):
            c = F.neg(F.gpow(k))
            a = F.gpow(1)
            assert count_diagonal_curve_points(q, r, a, 1, c) == brute_points(q, r, a, 1, c)


def test_point_count_errors():
    with pytest.raises(IndexDoesNotDivide):
        count_diagonal_curve_points(7, 4, 1, 1, 1)
    with pytest.raises(ZeroCoefficient):
        count_diagonal_curve_points(7, 3, 1, 0, 1)


def test_weil_sweep():
    records = weil_sweep(169)
    assert records and all(rec.ok for rec in records)
    for rec in records:
        if rec.r <= 2:
            assert rec.points == rec.q + 1
    assert {(rec.q, rec.r) for rec in records} == {
        (q, r) for q in prime_powers_upto(169) for r in range(1, q) if (q - 1) % r == 0
    }


# -- stabilization -----------------------------------------------------------------


def test_stabilization_r2():
    report = stabilization_scan(2, 100)
    assert [s.q for s in report.sporadics] == [3, 5]
    assert report.empirical_threshold <= report.bound_formula == 6
    for rec in report.q_records:
        if rec.q >= 7:
            assert rec.stable
            want = build_Hr_prime(2) if rec.q % 4 == 3 else build_Hr(2)
            assert iso_map(build_quotient(rec.q, 2), want) is not None


def test_stabilization_r3_is_sharp():
    report = stabilization_scan(3, 200)
    assert [s.q for s in report.sporadics] == [4, 7, 13, 16]
    assert report.sharp_interval == (16, 19)
    assert report.bound_formula == 17
    assert all(rec.stable for rec in report.q_records if rec.q >= 19)


def test_stabilization_r4():
    report = stabilization_scan(4, 500)
    assert report.empirical_threshold <= 56
    assert report.to_dict()["bound"] == 56


@pytest.mark.parametrize("r", [3, 4, 6, 8])
def test_lower_bound_family(r):
    # q = (r-1)² is congruent to 1 mod r but sits below the stable range
    q = (r - 1) ** 2
    T = build_quotient(q, r)
    assert iso_map(T, build_Hr(r)) is None
    if r % 2 == 0:
        assert iso_map(T, build_Hr_prime(r)) is None


@pytest.mark.parametrize("r", [2, 3, 4, 5])
def test_every_sum_of_units_covers_the_units_beyond_the_bound(r):
    for q in prime_powers_upto(nr_bound(r) + 150):
        if q < nr_bound(r) or (q - 1) % r:
            continue
        T = build_quotient(q, r)
        table = full_table(T)
        for a, b in itertools.product(range(1, T.n), repeat=2):
            assert table[a][b] & T.units == T.units, (q, a, b)
        assert iso_map(T, expected_stable_class(q, r)) is not None


# -- classification ----------------------------------------------------------------


def test_classify_order3():
    report = classify_quotients(3)
    finite = report.by_status(FINITE)
    assert ids(c.table for c in finite) == ids(ORDER3[i] for i in (1, 2, 3, 4))
    witness = {c.class_id: c.witness["q"] for c in finite}
    assert witness[canonical_id(ORDER3[1])] == 3
    assert witness[canonical_id(ORDER3[2])] == 5
    assert witness[canonical_id(ORDER3[3])] >= 7 and witness[canonical_id(ORDER3[3])] % 4 == 1
    assert witness[canonical_id(ORDER3[4])] >= 7 and witness[canonical_id(ORDER3[4])] % 4 == 3
    (rest,) = [c for c in report.classes if c.status != FINITE]
    assert rest.class_id == canonical_id(signs())
    assert rest.status == INFINITE
    assert rest.obstruction is Obstruction.NO_OBSTRUCTION
    assert report.scanned_q == [3, 5]


def test_classify_order4():
    report = classify_quotients(4)
    finite = report.by_status(FINITE)
    assert ids(c.table for c in finite) == ids(ORDER4[i] for i in (1, 2, 4, 5))
    assert sorted(c.witness["q"] for c in finite) == [4, 7, 13, 19]
    (inf,) = report.by_status(INFINITE)
    assert iso_map(inf.table, build_valuation_quotient(3)) is not None
    assert inf.obstruction is Obstruction.NO_OBSTRUCTION
    nots = report.by_status(NOT_QUOTIENT)
    assert ids(c.table for c in nots) == ids([ORDER4[6], ORDER4[7]])
    assert all(c.obstruction is Obstruction.OBSTRUCTED_ODD_INDEX for c in nots)


def test_classify_order5():
    report = classify_quotients(5)
    assert report.scanned_q == [5, 9, 13, 17, 25, 29, 37, 41, 49, 53]
    finite = ids(c.table for c in report.by_status(FINITE))
    assert ids([build_Hr(4), build_Hr_prime(4), embed_field(gf_build(5))]) <= finite
    assert len(report.classes) == len(ids(c.table for c in report.classes))
