"""Exhaustive enumeration of finite hyperfields up to isomorphism.

For each abelian group of order n-1 and each candidate -1 (an element
whose square is 1), the rows ``S_x = 1 ⊞ x`` are assigned orbit by orbit
under ``x -> x⁻¹``: commutativity forces ``S_x = x·S_{x⁻¹}``, so a pair
``{x, x⁻¹}`` has one free row and a self-inverse ``x`` needs ``x·S_x = S_x``.
Survivors go through the full axiom check and are deduplicated by
canonical id.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

from .errors import OrderTooLarge
from .groups import AbelianGroupSpec, abelian_groups
from .hyperfield import (
    HyperfieldTable,
    IsoClassId,
    canonical_form,
    canonical_id,
    bits,
    check_axioms,
    scale_mask,
)

MAX_ORDER = 9


def _check_order(n: int) -> None:
    if not isinstance(n, int) or n < 2 or n > MAX_ORDER:
        raise OrderTooLarge(f"order must be between 2 and {MAX_ORDER}, got {n}")


def _row_choices(group: AbelianGroupSpec, neg_one: int, reverse: bool):
    """Per-orbit candidate lists: each entry is (members, [row tuples])."""
    n = group.order + 1
    seen = set()
    orbits = []
    for x in group.elements():
        if x in seen:
            continue
        xi = group.inv(x)
        seen.update((x, xi))
        choices = []
        for mask in range(1, 1 << n):
            if bool(mask & 1) != (x == neg_one):
                continue
            if x == xi:
                if scale_mask(group, x, mask) != mask:
                    continue
                choices.append(((x, mask),))
            else:
                choices.append(((x, mask), (xi, scale_mask(group, xi, mask))))
        if reverse:
            choices.reverse()
        orbits.append(choices)
    if reverse:
        orbits.reverse()
    return orbits


def _associative_so_far(group: AbelianGroupSpec, rows: list[int], known: list[bool]) -> bool:
    """Check ``(1 ⊞ b) ⊞ c == 1 ⊞ (b ⊞ c)`` wherever the needed rows are known.

    By distributivity this is all of associativity; pairs touching an
    unassigned row are skipped.
    """
    mul, inv = group.mul_table, group.inverses
    for b in group.elements():
        if not known[b]:
            continue
        s_b = rows[b - 1]
        inv_b = inv[b]
        for c in group.elements():
            y = mul[inv_b][c]
            if not known[y]:
                continue
            lhs = 0
            for d in bits(s_b):
                if d == 0:
                    lhs |= 1 << c
                    continue
                z = mul[inv[d]][c]
                if not known[z]:
                    break
                lhs |= scale_mask(group, d, rows[z - 1])
            else:
                rhs = 0
                for e in bits(scale_mask(group, b, rows[y - 1])):
                    if e == 0:
                        rhs |= 2
                    elif known[e]:
                        rhs |= rows[e - 1]
                    else:
                        break
                else:
                    if lhs != rhs:
                        return False
    return True


def _candidates(group, neg_one, reverse=False, first=None) -> Iterator[HyperfieldTable]:
    """Row assignments that are commutative and, as far as known, associative."""
    orbits = _row_choices(group, neg_one, reverse)
    if first is not None:
        orbits[0] = [orbits[0][first]]
    rows = [0] * group.order
    known = [False] * (group.order + 1)
    depth = len(orbits)

    def extend(k):
        if k == depth:
            yield HyperfieldTable(group, neg_one, tuple(rows))
            return
        members = [x for x, _ in orbits[k][0]]
        for x in members:
            known[x] = True
        for assignment in orbits[k]:
            for x, mask in assignment:
                rows[x - 1] = mask
            if _associative_so_far(group, rows, known):
                yield from extend(k + 1)
        for x in members:
            known[x] = False

    yield from extend(0)


def _partitions(n: int, reverse: bool):
    for group in abelian_groups(n - 1):
        for neg_one in group.involutions():
            width = len(_row_choices(group, neg_one, reverse)[0])
            for first in range(width):
                yield group.factors, neg_one, first, reverse


def _search(part) -> list[HyperfieldTable]:
    factors, neg_one, first, reverse = part
    group = AbelianGroupSpec(factors)
    return [T for T in _candidates(group, neg_one, reverse, first) if check_axioms(T).ok]


def enumerate_structures(n: int, *, reverse: bool = False, jobs: int = 1) -> list[HyperfieldTable]:
    """Every axiom-satisfying row assignment of order ``n`` (not deduplicated)."""
    _check_order(n)
    parts = list(_partitions(n, reverse))
    if jobs == 1:
        chunks = map(_search, parts)
    else:
        with ProcessPoolExecutor(max_workers=jobs or os.cpu_count()) as pool:
            chunks = list(pool.map(_search, parts))
    out = [T for chunk in chunks for T in chunk]
    return sorted(out, key=HyperfieldTable.encode)


def enumerate_hyperfields(n: int, *, reverse: bool = False, jobs: int = 1) -> list[HyperfieldTable]:
    """One canonical representative per isomorphism class, sorted by id."""
    classes: dict[IsoClassId, HyperfieldTable] = {}
    for T in enumerate_structures(n, reverse=reverse, jobs=jobs):
        cid = canonical_id(T)
        if cid not in classes:
            classes[cid] = canonical_form(T)
    for cid, T in classes.items():
        assert T.encode() == cid
        assert check_axioms(T).ok
    return [classes[cid] for cid in sorted(classes)]


# -- inventory files -------------------------------------------------------------


def write_inventory(path, tables: list[HyperfieldTable], order: int) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for T in tables:
            fh.write(T.to_json() + "\n")
        fh.write(json.dumps({"order": order, "class_count": len(tables)}, separators=(",", ":")) + "\n")


def read_inventory(path) -> tuple[list[HyperfieldTable], dict]:
    tables, summary = [], {}
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            if not line.strip():
                continue
            record = json.loads(line)
            if "class_count" in record:
                summary = record
            else:
                tables.append(HyperfieldTable.from_dict(record))
    return tables, summary


# -- census ------------------------------------------------------------------------


@dataclass
class CensusRecord:
    order: int
    H_count: int
    Q_finite_count: int
    representatives: list[HyperfieldTable] = field(repr=False)
    witnesses: dict[str, dict] = field(default_factory=dict)
    published: bool = False

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "H_count": self.H_count,
            "Q_finite_count": self.Q_finite_count,
            "source": "published" if self.published else "computed",
            "representatives": [T.to_dict() for T in self.representatives],
            "witnesses": self.witnesses,
        }


# orders whose class counts are stated in the literature this package reproduces
_KNOWN_ORDERS = {2, 3, 4}


def census(n: int, *, jobs: int = 1) -> CensusRecord:
    from .analysis import classify_quotients

    report = classify_quotients(n, jobs=jobs)
    witnesses = {
        c.class_id.hex(): c.witness
        for c in report.classes
        if c.status == "finite-quotient"
    }
    return CensusRecord(
        order=n,
        H_count=len(report.classes),
        Q_finite_count=len(witnesses),
        representatives=[c.table for c in report.classes],
        witnesses=witnesses,
        published=n in _KNOWN_ORDERS,
    )
