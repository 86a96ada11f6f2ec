"""Finite fields F_q as exp/log tables over a fixed irreducible modulus.

Elements are integers ``0 <= a < q``.  The integer ``a`` encodes the
polynomial ``sum(c_i x^i)`` through its base-``p`` digits, lowest degree
first, so for prime ``q`` the encoding is the usual residue.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import FieldTooLarge, NotAPrimePower, ZeroHasNoLog

MAX_ORDER = 2**20
ADD_TABLE_LIMIT = 4096


def factorize(m: int) -> dict[int, int]:
    """Prime factorization of ``m >= 1`` by trial division."""
    out: dict[int, int] = {}
    d = 2
    while d * d <= m:
        while m % d == 0:
            out[d] = out.get(d, 0) + 1
            m //= d
        d += 1
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, n)`` with ``q == p**n``, or raise :class:`NotAPrimePower`."""
    if not isinstance(q, (int, np.integer)) or q < 2:
        raise NotAPrimePower(q)
    f = factorize(int(q))
    if len(f) != 1:
        raise NotAPrimePower(q)
    ((p, n),) = f.items()
    return p, n


def is_prime_power(q: int) -> bool:
    try:
        prime_power(q)
    except NotAPrimePower:
        return False
    return True


def prime_powers_upto(limit: int) -> list[int]:
    """All prime powers ``2 <= q <= limit`` in increasing order (sieve)."""
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, int(limit**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, limit + 1, i)))
    out = []
    for p in range(2, limit + 1):
        if sieve[p]:
            pk = p
            while pk <= limit:
                out.append(pk)
                pk *= p
    return sorted(out)


# -- polynomial helpers over F_p (coefficient lists, low degree first) -------


def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_rem(a: list[int], m: list[int], p: int) -> list[int]:
    """Remainder of ``a`` modulo the monic polynomial ``m``."""
    a = _poly_trim(list(a))
    dm = len(m) - 1
    while len(a) - 1 >= dm:
        c = a[-1]
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        _poly_trim(a)
    return a


def _monic_polys(p: int, degree: int):
    """Monic polynomials of the given degree, lexicographic in (c_0, c_1, ...)."""
    for low in itertools.product(range(p), repeat=degree):
        yield list(low) + [1]


def is_irreducible(m: list[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg(m)/2."""
    n = len(m) - 1
    if n == 1:
        return True
    if m[0] == 0:
        return False
    for d in range(1, n // 2 + 1):
        for f in _monic_polys(p, d):
            if not _poly_rem(m, f, p):
                return False
    return True


def smallest_irreducible(p: int, n: int) -> list[int]:
    """Lexicographically smallest monic irreducible of degree ``n`` over F_p.

    Candidates are ordered by the coefficient tuple ``(c_0, ..., c_{n-1})``.
    """
    for m in _monic_polys(p, n):
        if is_irreducible(m, p):
            return m
    raise AssertionError(f"no irreducible polynomial of degree {n} over F_{p}")


def _to_digits(a: int, p: int, n: int) -> list[int]:
    out = []
    for _ in range(n):
        a, d = divmod(a, p)
        out.append(d)
    return out


def _from_digits(digits, p: int) -> int:
    a = 0
    for d in reversed(digits):
        a = a * p + d
    return a


def _polymulmod(a: int, b: int, p: int, n: int, modulus: list[int]) -> int:
    da, db = _to_digits(a, p, n), _to_digits(b, p, n)
    prod = [0] * (2 * n - 1)
    for i, x in enumerate(da):
        if x:
            for j, y in enumerate(db):
                prod[i + j] = (prod[i + j] + x * y) % p
    rem = _poly_rem(prod, modulus, p)
    return _from_digits(rem + [0] * (n - len(rem)), p)


def _polypow(a: int, e: int, p: int, n: int, modulus: list[int]) -> int:
    result = 1
    while e:
        if e & 1:
            result = _polymulmod(result, a, p, n, modulus)
        a = _polymulmod(a, a, p, n, modulus)
        e >>= 1
    return result


@dataclass(frozen=True, eq=True)
class GFTable:
    """The field F_q with a distinguished primitive element.

    ``exp_table[k]`` is ``g**k`` for ``0 <= k < q-1`` and ``log_table[a]``
    is its inverse on nonzero ``a`` (``log_table[0]`` is ``-1``).
    """

    p: int
    n: int
    q: int
    modulus: tuple[int, ...]
    generator: int
    exp_table: tuple[int, ...] = field(repr=False)
    log_table: tuple[int, ...] = field(repr=False)

    # arithmetic ------------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        p = self.p
        if self.n == 1:
            return (a + b) % p
        if p == 2:
            return a ^ b
        out, scale = 0, 1
        while a or b:
            a, da = divmod(a, p)
            b, db = divmod(b, p)
            out += ((da + db) % p) * scale
            scale *= p
        return out

    def neg(self, a: int) -> int:
        p = self.p
        if p == 2:
            return a
        if self.n == 1:
            return (-a) % p
        out, scale = 0, 1
        while a:
            a, d = divmod(a, p)
            out += ((-d) % p) * scale
            scale *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp_table[(self.log_table[a] + self.log_table[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        return self.exp_table[(-self.log_table[a]) % (self.q - 1)]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("0 has no multiplicative inverse")
            return 1 if e == 0 else 0
        return self.exp_table[(self.log_table[a] * e) % (self.q - 1)]

    def gpow(self, k: int) -> int:
        """The element g**k."""
        return self.exp_table[k % (self.q - 1)]

    def dlog(self, a: int) -> int:
        if a == 0:
            raise ZeroHasNoLog()
        return self.log_table[a]

    @property
    def minus_one(self) -> int:
        return self.neg(1)

    def elements(self) -> range:
        return range(self.q)

    def add_table(self) -> np.ndarray:
        """Dense ``q x q`` addition table (only for ``q <= ADD_TABLE_LIMIT``)."""
        return _add_table(self)

    def mul_table(self) -> np.ndarray:
        return _mul_table(self)


@lru_cache(maxsize=64)
def _add_table(F: GFTable) -> np.ndarray:
    if F.q > ADD_TABLE_LIMIT:
        raise FieldTooLarge(f"dense addition table refused for q={F.q}")
    idx = np.arange(F.q)
    table = np.zeros((F.q, F.q), dtype=np.int64)
    for i in range(F.n):
        digit = (idx // F.p**i) % F.p
        table += ((digit[:, None] + digit[None, :]) % F.p) * F.p**i
    table.setflags(write=False)
    return table


@lru_cache(maxsize=64)
def _mul_table(F: GFTable) -> np.ndarray:
    if F.q > ADD_TABLE_LIMIT:
        raise FieldTooLarge(f"dense multiplication table refused for q={F.q}")
    exp = np.array(F.exp_table + F.exp_table)
    log = np.array(F.log_table)
    table = np.zeros((F.q, F.q), dtype=np.int64)
    table[1:, 1:] = exp[log[1:, None] + log[None, 1:]]
    table.setflags(write=False)
    return table


@lru_cache(maxsize=256)
def gf_build(q: int) -> GFTable:
    """Construct F_q deterministically.

    The modulus is the lexicographically smallest monic irreducible of
    degree n and the generator is the smallest element of order q-1.
    """
    p, n = prime_power(q)
    if q > MAX_ORDER:
        raise FieldTooLarge(f"q={q} exceeds the supported maximum {MAX_ORDER}")
    modulus = smallest_irreducible(p, n)
    cofactors = [(q - 1) // ell for ell in factorize(q - 1)] if q > 2 else []

    if n == 1:
        def mulmod(a, b):
            return a * b % p

        def powmod(a, e):
            return pow(a, e, p)
    else:
        def mulmod(a, b):
            return _polymulmod(a, b, p, n, modulus)

        def powmod(a, e):
            return _polypow(a, e, p, n, modulus)

    generator = next(
        a for a in range(1, q) if all(powmod(a, c) != 1 for c in cofactors)
    )
    exp_table = [0] * (q - 1)
    log_table = [-1] * q
    x = 1
    for k in range(q - 1):
        exp_table[k] = x
        log_table[x] = k
        x = mulmod(x, generator)
    if x != 1:
        raise AssertionError("generator order check failed")
    return GFTable(p, n, q, tuple(modulus), generator, tuple(exp_table), tuple(log_table))


def gf_add(F: GFTable, a: int, b: int) -> int:
    return F.add(a, b)


def gf_mul(F: GFTable, a: int, b: int) -> int:
    return F.mul(a, b)


def gf_dlog(F: GFTable, a: int) -> int:
    return F.dlog(a)
