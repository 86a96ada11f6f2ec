"""Point counts on diagonal curves, the stabilization threshold N_r, scans
over q, and the classification of which small hyperfields are quotients.

All inequalities involving square roots are decided by comparing squares
of integers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import IndexDoesNotDivide, ZeroCoefficient
from .gf import GFTable, gf_build, prime_powers_upto
from .hyperfield import HyperfieldTable, IsoClassId, canonical_id, check_axioms, signs
from .quotient import (
    Obstruction,
    build_Hr,
    build_Hr_prime,
    build_quotient,
    build_valuation_quotient,
    infinite_quotient_obstruction,
    non_quotient_criterion,
)

# -- the threshold N_r -------------------------------------------------------------


def _bound_holds(N: int, r: int) -> bool:
    """``(N + 1) - (r-1)(r-2) sqrt(N) - 3r > 0`` in exact integer arithmetic."""
    lhs = N + 1 - 3 * r
    c = (r - 1) * (r - 2)
    if lhs <= 0:
        return False
    return lhs * lhs > c * c * N


def nr_bound(r: int) -> int:
    """Smallest positive N with ``(N+1) - (r-1)(r-2)·√N - 3r > 0``.

    The left side decreases and then increases in N and is negative at
    N = 1, so the first N where it turns positive is the answer.
    """
    if r < 1:
        raise ValueError(f"r must be positive, got {r}")
    N = 1
    while not _bound_holds(N, r):
        N += 1
    return N


# -- Davenport–Hasse point counts ------------------------------------------------------


def _check_curve(F: GFTable, r: int, coeffs) -> None:
    if r < 1 or (F.q - 1) % r:
        raise IndexDoesNotDivide(F.q, r)
    if any(c == 0 for c in coeffs):
        raise ZeroCoefficient("coefficients of a x^r + b y^r + c z^r must be nonzero")


def count_diagonal_curve_points(q: int, r: int, a: int, b: int, c: int) -> int:
    """Projective solutions of ``a x^r + b y^r + c z^r = 0`` over F_q.

    Iterates the representatives (x : y : 1), (x : 1 : 0) and (1 : 0 : 0).
    Coefficients are field elements in the encoding of :func:`gf_build`.
    """
    F = gf_build(q)
    _check_curve(F, r, (a, b, c))
    add, mul = F.add_table(), F.mul_table()
    powers = np.array([F.pow(x, r) for x in range(q)])
    ax = mul[a, powers]
    by = mul[b, powers]
    # z = 1: a x^r + b y^r + c == 0
    count = int(np.count_nonzero(add[add[ax[:, None], by[None, :]], c] == 0))
    # z = 0, y = 1: a x^r + b == 0
    count += int(np.count_nonzero(add[ax, b] == 0))
    # (1 : 0 : 0) lies on the curve only if a == 0
    count += int(a == 0)
    return count


def check_weil_bound(q: int, r: int, a: int, b: int, c: int) -> bool:
    """``|M - (q+1)| <= (r-1)(r-2)·√q`` compared as squares."""
    M = count_diagonal_curve_points(q, r, a, b, c)
    dev = M - (q + 1)
    k = (r - 1) * (r - 2)
    return dev * dev <= k * k * q


@dataclass
class WeilRecord:
    q: int
    r: int
    c: int
    points: int
    ok: bool


def weil_sweep(q_max: int) -> list[WeilRecord]:
    """The bound for ``x^r + y^r - g^k z^r`` over all q <= q_max, r | q-1, k < r."""
    out = []
    for q in prime_powers_upto(q_max):
        F = gf_build(q)
        for r in range(1, q):
            if (q - 1) % r:
                continue
            for k in range(r):
                c = F.neg(F.gpow(k))
                M = count_diagonal_curve_points(q, r, 1, 1, c)
                dev = M - (q + 1)
                bound = (r - 1) * (r - 2)
                out.append(WeilRecord(q, r, c, M, dev * dev <= bound * bound * q))
    return out


# -- stabilization ---------------------------------------------------------------------


def expected_stable_class(q: int, r: int) -> HyperfieldTable:
    """H_r, or H'_r when r is even and q ≡ r+1 (mod 2r)."""
    if r % 2 == 0 and q % (2 * r) == r + 1:
        return build_Hr_prime(r)
    return build_Hr(r)


def stable_marker(q: int, r: int) -> str:
    return "stable H'_r" if r % 2 == 0 and q % (2 * r) == r + 1 else "stable H_r"


@dataclass
class StabilizationRecord:
    q: int
    class_id: IsoClassId
    stable: bool

    def to_dict(self) -> dict:
        return {"q": self.q, "class_id": self.class_id.hex(), "stable": self.stable}


@dataclass
class StabilizationReport:
    r: int
    bound_formula: int
    q_max: int
    q_records: list[StabilizationRecord]
    empirical_threshold: int
    sporadics: list[StabilizationRecord]
    sharp_interval: tuple[Optional[int], Optional[int]]

    def to_dict(self) -> dict:
        return {
            "r": self.r,
            "bound": self.bound_formula,
            "q_max": self.q_max,
            "threshold": self.empirical_threshold,
            "sharp_interval": list(self.sharp_interval),
            "sporadics": [s.to_dict() for s in self.sporadics],
            "records": [s.to_dict() for s in self.q_records],
        }


def quotient_orders(r: int, q_max: int, q_min: int = 2) -> list[int]:
    """Prime powers q in [q_min, q_max] with q ≡ 1 (mod r)."""
    return [q for q in prime_powers_upto(q_max) if q >= q_min and (q - 1) % r == 0]


def stabilization_scan(r: int, q_max: int) -> StabilizationReport:
    """Classify F_q / G^r_q for every admissible q <= q_max.

    ``empirical_threshold`` is one more than the largest q that lands off
    the H_r/H'_r pattern (2 if none does).  ``sharp_interval`` is
    ``(largest failing q, smallest stable q above it]``.
    """
    if r < 2:
        raise ValueError(f"r must be at least 2, got {r}")
    targets = {
        "stable H_r": canonical_id(build_Hr(r)),
    }
    if r % 2 == 0:
        targets["stable H'_r"] = canonical_id(build_Hr_prime(r))
    records = []
    for q in quotient_orders(r, q_max):
        cid = canonical_id(build_quotient(q, r))
        records.append(StabilizationRecord(q, cid, cid == targets[stable_marker(q, r)]))
    sporadics = [rec for rec in records if not rec.stable]
    last_bad = sporadics[-1].q if sporadics else None
    threshold = last_bad + 1 if last_bad is not None else 2
    first_good = next((rec.q for rec in records if rec.q >= threshold), None)
    return StabilizationReport(
        r=r,
        bound_formula=nr_bound(r),
        q_max=q_max,
        q_records=records,
        empirical_threshold=threshold,
        sporadics=sporadics,
        sharp_interval=(last_bad, first_good),
    )


# -- classification of small hyperfields -------------------------------------------------

FINITE = "finite-quotient"
INFINITE = "infinite-quotient"
NOT_QUOTIENT = "not-quotient"
UNDETERMINED = "undetermined"


def known_infinite_realizations(n: int) -> dict[IsoClassId, str]:
    """Hyperfields of order n with a known quotient of an infinite field."""
    out = {canonical_id(build_valuation_quotient(n - 1)): f"Q/G (p-adic valuation mod {n - 1})"}
    if n == 3:
        out.setdefault(canonical_id(signs()), "R/R_{>0}")
    return out


@dataclass
class ClassVerdict:
    class_id: IsoClassId
    table: HyperfieldTable
    status: str
    witness: Optional[dict] = None
    obstruction: Obstruction = Obstruction.NO_OBSTRUCTION
    non_quotient: bool = False
    realization: Optional[str] = None

    def to_dict(self) -> dict:
        return {
            "class_id": self.class_id.hex(),
            "status": self.status,
            "witness": self.witness,
            "obstruction": self.obstruction.value,
            "non_quotient": self.non_quotient,
            "realization": self.realization,
            "table": self.table.to_dict(),
        }


@dataclass
class ClassificationReport:
    order: int
    bound: int
    scanned_q: list[int]
    stable_samples: dict[str, list[int]]
    classes: list[ClassVerdict] = field(default_factory=list)

    def by_status(self, status: str) -> list[ClassVerdict]:
        return [c for c in self.classes if c.status == status]

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "bound": self.bound,
            "scanned_q": self.scanned_q,
            "stable_samples": self.stable_samples,
            "classes": [c.to_dict() for c in self.classes],
        }


def _stable_samples(r: int, bound: int, per_class: int = 3) -> dict[str, list[int]]:
    """A few concrete q >= bound in each stable congruence class."""
    markers = ["stable H_r"] + (["stable H'_r"] if r % 2 == 0 else [])
    out: dict[str, list[int]] = {m: [] for m in markers}
    limit = max(4 * bound, 64)
    while any(len(v) < per_class for v in out.values()):
        for q in quotient_orders(r, limit, q_min=bound):
            bucket = out[stable_marker(q, r)]
            if len(bucket) < per_class and q not in bucket:
                bucket.append(q)
        limit *= 2
    return out


def classify_quotients(n: int, *, jobs: int = 1) -> ClassificationReport:
    """Decide, for each hyperfield class of order n, whether it is F_q/G^r_q.

    Every q below the threshold N_r is built explicitly; beyond it the
    stable classes stand in for all q, and three sampled q per congruence
    class confirm that.  Unmatched classes get the infinite-field verdicts.
    """
    from .enumeration import enumerate_hyperfields

    r = n - 1
    bound = nr_bound(r)
    scanned = quotient_orders(r, bound - 1)
    witnesses: dict[IsoClassId, dict] = {}
    for q in scanned:
        T = build_quotient(q, r)
        assert check_axioms(T).ok
        witnesses.setdefault(canonical_id(T), {"q": q, "stable": None})

    samples = _stable_samples(r, bound)
    for marker, qs in samples.items():
        expected = canonical_id(build_Hr(r) if marker == "stable H_r" else build_Hr_prime(r))
        for q in qs:
            if canonical_id(build_quotient(q, r)) != expected:
                raise AssertionError(f"q={q}, r={r} is not {marker} although q >= {bound}")
        wit = witnesses.setdefault(expected, {"q": qs[0], "stable": marker})
        wit["stable"] = marker
        wit["q"] = min(wit["q"], qs[0])

    realizations = known_infinite_realizations(n)
    report = ClassificationReport(n, bound, scanned, samples)
    for T in enumerate_hyperfields(n, jobs=jobs):
        cid = canonical_id(T)
        verdict = ClassVerdict(
            class_id=cid,
            table=T,
            status=UNDETERMINED,
            obstruction=infinite_quotient_obstruction(T),
            non_quotient=non_quotient_criterion(T),
            realization=realizations.get(cid),
        )
        if cid in witnesses:
            verdict.status = FINITE
            verdict.witness = witnesses.pop(cid)
        elif verdict.realization is not None:
            verdict.status = INFINITE
        elif verdict.obstruction is not Obstruction.NO_OBSTRUCTION or verdict.non_quotient:
            verdict.status = NOT_QUOTIENT
        report.classes.append(verdict)
    if witnesses:
        raise AssertionError(f"{len(witnesses)} quotient tables match no enumerated class")
    return report
