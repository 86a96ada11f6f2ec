"""Finite hyperfields stored as the single row ``1 ⊞ x``.

A hyperfield of order ``n`` has elements ``0..n-1``: 0 is the additive
zero and ``1..n-1`` are the elements of the multiplicative group (see
:mod:`hyperfields.groups`).  Subsets of the carrier are bitmasks, bit ``i``
standing for element ``i``.

Only the sums ``S_x = 1 ⊞ x`` are stored.  Distributivity recovers the rest:
``a ⊞ b = a · S_{a⁻¹b}`` for nonzero ``a, b``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple, Optional

from .errors import MalformedTable
from .gf import GFTable
from .groups import AbelianGroupSpec

IsoClassId = bytes

_MASK_TABLE_LIMIT = 10


def bits(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def to_mask(elements: Iterable[int]) -> int:
    m = 0
    for e in elements:
        m |= 1 << e
    return m


@lru_cache(maxsize=None)
def _scaled_masks(factors: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    """``table[a][mask]`` is the image of ``mask`` under multiplication by ``a``."""
    G = AbelianGroupSpec(factors)
    mt = G.mul_table
    n = G.order + 1
    out = []
    for a in range(n):
        row = mt[a]
        out.append(tuple(to_mask(row[e] for e in bits(m)) for m in range(1 << n)))
    return tuple(out)


def scale_mask(group: AbelianGroupSpec, a: int, mask: int) -> int:
    """Multiply every member of the subset ``mask`` by ``a`` (0 stays 0)."""
    if group.order + 1 <= _MASK_TABLE_LIMIT:
        return _scaled_masks(group.factors)[a][mask]
    row = group.mul_table[a]
    return to_mask(row[e] for e in bits(mask))


def permute_mask(perm, mask: int) -> int:
    return to_mask(perm[e] for e in bits(mask))


@dataclass(frozen=True)
class HyperfieldTable:
    """A finite hyperfield in row-of-1 form.

    ``rows[x - 1]`` is the bitmask of ``1 ⊞ x`` for each nonzero ``x``.
    """

    group: AbelianGroupSpec
    neg_one: int
    rows: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(int(r) for r in self.rows))
        if len(self.rows) != self.group.order:
            raise MalformedTable(
                f"expected {self.group.order} rows, got {len(self.rows)}"
            )
        full = (1 << self.n) - 1
        for r in self.rows:
            if r < 0 or r & ~full:
                raise MalformedTable(f"row mask {r} is out of range")
        if not 1 <= self.neg_one <= self.group.order:
            raise MalformedTable(f"neg_one={self.neg_one} is not a nonzero element")

    @classmethod
    def from_sets(cls, factors, neg_one: int, rows) -> "HyperfieldTable":
        return cls(AbelianGroupSpec(tuple(factors)), neg_one, tuple(to_mask(s) for s in rows))

    @property
    def n(self) -> int:
        """Number of elements, zero included."""
        return self.group.order + 1

    @property
    def factors(self) -> tuple[int, ...]:
        return self.group.factors

    def elements(self) -> range:
        return range(self.n)

    @property
    def everything(self) -> int:
        return (1 << self.n) - 1

    @property
    def units(self) -> int:
        return self.everything & ~1

    def row(self, x: int) -> int:
        return self.rows[x - 1]

    def row_set(self, x: int) -> frozenset[int]:
        return frozenset(bits(self.rows[x - 1]))

    def neg(self, a: int) -> int:
        return self.group.mul(self.neg_one, a) if a else 0

    def sum_mask(self, a: int, b: int) -> int:
        if a == 0:
            return 1 << b
        if b == 0:
            return 1 << a
        G = self.group
        return scale_mask(G, a, self.rows[G.mul(G.inv(a), b) - 1])

    def hyperadd(self, a: int, b: int) -> frozenset[int]:
        return frozenset(bits(self.sum_mask(a, b)))

    def label(self, a: int) -> str:
        return self.group.label(a)

    def relabel(self, perm) -> "HyperfieldTable":
        """Transport the structure along a group automorphism ``perm``."""
        rows = [0] * self.group.order
        for x in self.group.elements():
            rows[perm[x] - 1] = permute_mask(perm, self.rows[x - 1])
        return HyperfieldTable(self.group, perm[self.neg_one], tuple(rows))

    def encode(self) -> bytes:
        width = (self.n + 7) // 8
        head = b"".join(
            v.to_bytes(2, "big") for v in (self.n, len(self.factors), *self.factors, self.neg_one)
        )
        return head + b"".join(r.to_bytes(width, "big") for r in self.rows)

    # serialization -----------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "order": self.n,
            "factors": list(self.factors),
            "neg_one": self.neg_one,
            "rows": [bits(r) for r in self.rows],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, d: dict) -> "HyperfieldTable":
        try:
            T = cls.from_sets(d["factors"], int(d["neg_one"]), d["rows"])
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedTable(f"bad hyperfield record: {exc}") from exc
        if d.get("order", T.n) != T.n:
            raise MalformedTable(f"order {d['order']} does not match factors {T.factors}")
        return T

    @classmethod
    def from_json(cls, text: str) -> "HyperfieldTable":
        try:
            return cls.from_dict(json.loads(text))
        except json.JSONDecodeError as exc:
            raise MalformedTable(str(exc)) from exc


def full_table(T: HyperfieldTable) -> list[list[int]]:
    """The complete ``n x n`` hyperaddition table, entries as bitmasks."""
    G = T.group
    n = T.n
    mt, inv = G.mul_table, G.inverses
    table = [[0] * n for _ in range(n)]
    for a in range(n):
        table[0][a] = table[a][0] = 1 << a
    for a in range(1, n):
        row = table[a]
        for b in range(1, n):
            row[b] = scale_mask(G, a, T.rows[mt[inv[a]][b] - 1])
    return table


class AxiomReport(NamedTuple):
    ok: bool
    axiom: Optional[str] = None
    witness: Optional[tuple] = None
    detail: str = ""

    def __bool__(self):
        return self.ok


def _fail(axiom, witness, detail=""):
    return AxiomReport(False, axiom, witness, detail)


def check_axioms(T: HyperfieldTable) -> AxiomReport:
    """Check every hyperfield axiom on the derived full table.

    Returns the first violation found, in the order: nonempty sums,
    commutativity, identity, inverses, the stored ``neg_one``,
    reversibility, associativity, distributivity.
    """
    G = T.group
    n = T.n
    mt = G.mul_table
    table = full_table(T)
    rng = range(n)

    for a in rng:
        for b in rng:
            if not table[a][b]:
                return _fail("nonempty", (a, b))
    for a in rng:
        for b in range(a + 1, n):
            if table[a][b] != table[b][a]:
                return _fail("commutativity", (a, b))
    for a in rng:
        if table[0][a] != 1 << a:
            return _fail("identity", (a,))

    neg = [0] * n
    for a in rng:
        col = [b for b in rng if table[a][b] & 1]
        if len(col) != 1:
            return _fail("inverses", (a,), f"{len(col)} elements b with 0 in a ⊞ b")
        neg[a] = col[0]
    if neg[1] != T.neg_one:
        return _fail("neg_one", (T.neg_one,), f"the inverse of 1 is {neg[1]}")
    if mt[T.neg_one][T.neg_one] != 1:
        return _fail("neg_one", (T.neg_one,), "(-1)^2 != 1")

    # a ∈ b ⊞ c  <=>  -b ∈ (-a) ⊞ c
    for a in rng:
        na = neg[a]
        for b in rng:
            nb_bit = 1 << neg[b]
            row_b, row_na = table[b], table[na]
            for c in rng:
                if bool(row_b[c] >> a & 1) != bool(row_na[c] & nb_bit):
                    return _fail("reversibility", (a, b, c))

    # (a ⊞ b) ⊞ c == a ⊞ (b ⊞ c)
    unions: dict[tuple[int, int], int] = {}

    def union(x, mask):
        key = (x, mask)
        u = unions.get(key)
        if u is None:
            u = 0
            row = table[x]
            for d in bits(mask):
                u |= row[d]
            unions[key] = u
        return u

    for a in rng:
        for b in rng:
            ab = table[a][b]
            for c in rng:
                if union(a, table[b][c]) != union(c, ab):
                    return _fail("associativity", (a, b, c))

    for a in range(1, n):
        row_a = mt[a]
        for b in rng:
            for c in rng:
                if scale_mask(G, a, table[b][c]) != table[row_a[b]][row_a[c]]:
                    return _fail("distributivity", (a, b, c))
    return AxiomReport(True)


def is_hyperfield(T: HyperfieldTable) -> bool:
    return check_axioms(T).ok


def iso_map(A: HyperfieldTable, B: HyperfieldTable) -> Optional[tuple[int, ...]]:
    """First (lexicographic) isomorphism ``A -> B`` as a permutation, or None.

    Candidate maps are the group automorphisms; a hyperfield isomorphism is
    a group isomorphism fixing 0 that carries each row ``S_x`` of ``A`` onto
    the row ``S_φ(x)`` of ``B``.
    """
    if A.factors != B.factors:
        return None
    for perm in A.group.automorphisms:
        if all(
            permute_mask(perm, A.rows[x - 1]) == B.rows[perm[x] - 1]
            for x in A.group.elements()
        ):
            # -1 is determined by the rows, so it must be carried along
            assert perm[A.neg_one] == B.neg_one
            return perm
    return None


def canonical_form(T: HyperfieldTable) -> HyperfieldTable:
    """The relabeling of ``T`` with the smallest encoding."""
    return min((T.relabel(perm) for perm in T.group.automorphisms), key=HyperfieldTable.encode)


def canonical_id(T: HyperfieldTable) -> IsoClassId:
    return min(T.relabel(perm).encode() for perm in T.group.automorphisms)


def embed_field(F: GFTable) -> HyperfieldTable:
    """A finite field viewed as a hyperfield with singleton sums."""
    group = AbelianGroupSpec.cyclic(F.q - 1)

    def index(y):
        return 0 if y == 0 else 1 + F.dlog(y)

    rows = tuple(1 << index(F.add(1, F.gpow(k))) for k in range(F.q - 1))
    return HyperfieldTable(group, index(F.minus_one), rows)


# -- named examples ------------------------------------------------------------


def krasner() -> HyperfieldTable:
    """K = {0, 1} with 1 ⊞ 1 = {0, 1}."""
    return HyperfieldTable.from_sets((), 1, [{0, 1}])


def signs() -> HyperfieldTable:
    """The hyperfield of signs {0, 1, -1}; here -1 is the group element g."""
    return HyperfieldTable.from_sets((2,), 2, [{1}, {0, 1, 2}])


def weak_signs() -> HyperfieldTable:
    """The weak hyperfield of signs: 1 ⊞ 1 = {1, -1}."""
    return HyperfieldTable.from_sets((2,), 2, [{1, 2}, {0, 1, 2}])
