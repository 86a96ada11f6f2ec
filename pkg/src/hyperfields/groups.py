"""Finite abelian groups given by invariant factors.

Elements of a group of order ``m`` are the indices ``1..m``; index ``0`` is
left free for the additive zero of a hyperfield built on top.  Index ``i``
stands for the exponent tuple obtained by writing ``i - 1`` in mixed radix
with the first factor least significant, so a cyclic group of order ``m``
has ``g**k`` at index ``k + 1``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache

from .errors import HyperfieldError

_SUPERSCRIPTS = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")
_SUBSCRIPTS = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")


@dataclass(frozen=True)
class AbelianGroupSpec:
    factors: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(int(d) for d in self.factors))
        for i, d in enumerate(self.factors):
            if d < 2:
                raise HyperfieldError(f"invariant factor {d} < 2")
            if i and d % self.factors[i - 1]:
                raise HyperfieldError(f"invariant factors {self.factors} do not form a divisor chain")

    @classmethod
    def cyclic(cls, m: int) -> "AbelianGroupSpec":
        return cls((m,) if m > 1 else ())

    @property
    def order(self) -> int:
        out = 1
        for d in self.factors:
            out *= d
        return out

    @property
    def identity(self) -> int:
        return 1

    @property
    def is_cyclic(self) -> bool:
        return len(self.factors) <= 1

    def elements(self) -> range:
        return range(1, self.order + 1)

    def to_tuple(self, a: int) -> tuple[int, ...]:
        a -= 1
        out = []
        for d in self.factors:
            a, e = divmod(a, d)
            out.append(e)
        return tuple(out)

    def from_tuple(self, t) -> int:
        a, scale = 0, 1
        for e, d in zip(t, self.factors):
            a += (e % d) * scale
            scale *= d
        return a + 1

    @cached_property
    def mul_table(self) -> tuple[tuple[int, ...], ...]:
        """``mul_table[a][b]`` for ``a, b`` in ``0..order``; row/column 0 absorb."""
        m = self.order
        tuples = [None] + [self.to_tuple(a) for a in self.elements()]
        rows = [tuple([0] * (m + 1))]
        for a in self.elements():
            row = [0]
            for b in self.elements():
                row.append(self.from_tuple(x + y for x, y in zip(tuples[a], tuples[b])))
            rows.append(tuple(row))
        return tuple(rows)

    @cached_property
    def inverses(self) -> tuple[int, ...]:
        """``inverses[a]`` for nonzero ``a``; entry 0 is a placeholder."""
        return (0,) + tuple(self.from_tuple(-e for e in self.to_tuple(a)) for a in self.elements())

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def inv(self, a: int) -> int:
        return self.inverses[a]

    def power(self, a: int, k: int) -> int:
        return self.from_tuple(k * e for e in self.to_tuple(a))

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != 1:
            x = self.mul(x, a)
            k += 1
        return k

    def involutions(self) -> list[int]:
        """Elements ``x`` with ``x*x == 1``, the identity included."""
        return [a for a in self.elements() if self.mul(a, a) == 1]

    def generators(self) -> list[int]:
        """The standard generators, one per invariant factor."""
        return [self.from_tuple(tuple(int(i == j) for j in range(len(self.factors))))
                for i in range(len(self.factors))]

    @cached_property
    def automorphisms(self) -> tuple[tuple[int, ...], ...]:
        """All automorphisms as permutations of ``0..order`` fixing 0.

        Sorted lexicographically, so the identity comes first.
        """
        return _automorphisms(self.factors)

    def label(self, a: int) -> str:
        """Human label: ``0``, ``1``, ``g``, ``g²`` ... or ``g₁g₂²`` for products."""
        if a == 0:
            return "0"
        t = self.to_tuple(a)
        if not any(t):
            return "1"
        parts = []
        for i, e in enumerate(t):
            if e == 0:
                continue
            base = "g" if len(t) == 1 else "g" + str(i + 1).translate(_SUBSCRIPTS)
            parts.append(base if e == 1 else base + str(e).translate(_SUPERSCRIPTS))
        return "".join(parts)


@lru_cache(maxsize=None)
def _automorphisms(factors: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    G = AbelianGroupSpec(factors)
    candidates = [
        [b for b in G.elements() if d % G.element_order(b) == 0] for d in G.factors
    ]
    found = []
    for images in itertools.product(*candidates):
        perm = [0] * (G.order + 1)
        for a in G.elements():
            x = 1
            for e, img in zip(G.to_tuple(a), images):
                x = G.mul(x, G.power(img, e))
            perm[a] = x
        if len(set(perm)) == G.order + 1:
            found.append(tuple(perm))
    return tuple(sorted(found))


def invariant_factor_lists(m: int) -> list[tuple[int, ...]]:
    """Every divisor chain ``d_1 | d_2 | ... | d_k`` with product ``m``."""
    if m == 1:
        return [()]
    out = []

    def extend(prefix, remaining):
        if remaining == 1:
            out.append(tuple(prefix))
            return
        last = prefix[-1] if prefix else 1
        for d in range(2, remaining + 1):
            if remaining % d or d % last:
                continue
            # the rest must be a multiple of d at each step
            rest = remaining // d
            if rest != 1 and rest % d:
                continue
            extend(prefix + [d], rest)

    extend([], m)
    return sorted(out)


def abelian_groups(m: int) -> list[AbelianGroupSpec]:
    return [AbelianGroupSpec(f) for f in invariant_factor_lists(m)]
