"""Quotient hyperfields F_q / G^r_q, the stable classes H_r and H'_r, the
valuation quotient of Q, and necessary conditions for being a quotient.

Class ``m`` (``0 <= m < r``) is the coset ``g^m G`` and sits at element
index ``m + 1`` of a cyclic group of order ``r``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import IndexDoesNotDivide, OddIndex
from .gf import GFTable, gf_build, prime_power
from .groups import AbelianGroupSpec
from .hyperfield import HyperfieldTable, to_mask


@dataclass(frozen=True)
class QuotientDescriptor:
    q: int
    r: int

    def __post_init__(self):
        prime_power(self.q)
        if self.r < 1 or (self.q - 1) % self.r:
            raise IndexDoesNotDivide(self.q, self.r)

    @property
    def coset_size(self) -> int:
        return (self.q - 1) // self.r


def quotient_rows(F: GFTable, r: int) -> tuple[int, ...]:
    """Rows ``1 ⊞ [g^m]`` from the sums ``1 + g^k`` over all k."""
    rows = [0] * r
    one = 1
    for k in range(F.q - 1):
        s = F.add(one, F.exp_table[k])
        cls = 0 if s == 0 else 1 + F.log_table[s] % r
        rows[k % r] |= 1 << cls
    return tuple(rows)


def build_quotient(q: int | QuotientDescriptor, r: int | None = None, F: GFTable | None = None) -> HyperfieldTable:
    """The quotient hyperfield F_q / G^r_q.

    ``F`` may supply a field with a different choice of generator; by
    default the one from :func:`gf_build` is used.
    """
    d = q if isinstance(q, QuotientDescriptor) else QuotientDescriptor(q, r)
    if F is None:
        F = gf_build(d.q)
    rows = quotient_rows(F, d.r)
    neg_class = (d.q - 1) // 2 % d.r if d.q % 2 else 0
    return HyperfieldTable(AbelianGroupSpec.cyclic(d.r), 1 + neg_class, rows)


def build_Hr(r: int) -> HyperfieldTable:
    """H_r: -x = x, x ⊞ x = H and x ⊞ y = H^× for distinct nonzero x, y."""
    group = AbelianGroupSpec.cyclic(r)
    everything = (1 << (r + 1)) - 1
    units = everything & ~1
    rows = (everything,) + (units,) * (r - 1)
    return HyperfieldTable(group, 1, rows)


def build_Hr_prime(r: int) -> HyperfieldTable:
    """H'_r for even r: -x = g'x with g' of order 2, x ⊞ g'x = H, otherwise H^×."""
    if r % 2 or r < 2:
        raise OddIndex(r)
    group = AbelianGroupSpec.cyclic(r)
    everything = (1 << (r + 1)) - 1
    units = everything & ~1
    g_prime = 1 + r // 2
    rows = tuple(everything if x == g_prime else units for x in group.elements())
    return HyperfieldTable(group, g_prime, rows)


def build_valuation_quotient(r: int) -> HyperfieldTable:
    """Q / {x : ord_p(x) ≡ 0 mod r}, classes indexed by valuation mod r.

    Representatives of equal class can be chosen with equal valuation, and
    then their sums reach 0 and every class; representatives of distinct
    classes have distinct valuations and sum into the class of the smaller.
    """
    group = AbelianGroupSpec.cyclic(r)
    everything = (1 << (r + 1)) - 1
    rows = tuple(everything if x == 1 else to_mask((1, x)) for x in group.elements())
    return HyperfieldTable(group, 1, rows)


class Obstruction(enum.Enum):
    OBSTRUCTED_NEG_ROW = "ObstructedNegRow"
    OBSTRUCTED_ODD_INDEX = "ObstructedOddIndex"
    NO_OBSTRUCTION = "NoObstruction"


def infinite_quotient_obstruction(T: HyperfieldTable) -> Obstruction:
    """Necessary condition for ``T ≅ F/G`` with F infinite.

    A finite-index subgroup G of an infinite field has G - G = F, so
    ``1 ⊞ (-1)`` must be all of H; for odd index -1 lies in G and the same
    holds for ``1 ⊞ 1``.  The odd-index case is reported first because
    there ``-1 = 1`` and both tests coincide.  ``NO_OBSTRUCTION`` is not a
    certificate of realizability.
    """
    if T.group.order % 2 == 1 and T.row(1) != T.everything:
        return Obstruction.OBSTRUCTED_ODD_INDEX
    if T.row(T.neg_one) != T.everything:
        return Obstruction.OBSTRUCTED_NEG_ROW
    return Obstruction.NO_OBSTRUCTION


def non_quotient_criterion(T: HyperfieldTable) -> bool:
    """True certifies T is not a quotient of any field.

    A non-cyclic H^× rules out finite fields, and ``1 ⊞ (-1) ≠ H`` rules
    out infinite ones.
    """
    return not T.group.is_cyclic and T.row(T.neg_one) != T.everything


def primitive_elements(F: GFTable) -> list[int]:
    """All generators of F_q^×, i.e. g^k with gcd(k, q-1) = 1."""
    from math import gcd

    return sorted(F.exp_table[k] for k in range(F.q - 1) if gcd(k, F.q - 1) == 1)


def with_generator(F: GFTable, g: int) -> GFTable:
    """The same field with its exp/log tables rebuilt around generator ``g``."""
    exp_table = [0] * (F.q - 1)
    log_table = [-1] * F.q
    x = 1
    for k in range(F.q - 1):
        exp_table[k] = x
        log_table[x] = k
        x = F.mul(x, g)
    if x != 1 or len(set(exp_table)) != F.q - 1:
        raise ValueError(f"{g} is not a primitive element of F_{F.q}")
    return GFTable(F.p, F.n, F.q, F.modulus, g, tuple(exp_table), tuple(log_table))
