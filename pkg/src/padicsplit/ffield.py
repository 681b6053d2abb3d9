"""Tiny finite fields and exhaustive counts of split polynomials over them.

Fields of order p^k are built from a brute-force irreducible polynomial of
degree k over GF(p); elements are encoded as ints in [0, size) read as base-p
digit vectors.  Only desk-scale orders are supported (k <= 3, size <= 64),
which covers everything the enumeration oracle needs.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement, product

_FIELD_CACHE: dict[int, "SmallField"] = {}


def _prime_power(m: int) -> tuple[int, int]:
    if m < 2:
        raise ValueError("field size must be at least 2")
    p = 2
    while p * p <= m:
        if m % p == 0:
            break
        p += 1
    else:
        return m, 1
    k = 0
    n = m
    while n % p == 0:
        n //= p
        k += 1
    if n != 1:
        raise ValueError(f"{m} is not a prime power")
    return p, k


class SmallField:
    """GF(p^k) for small prime powers; add/mul via precomputed tables."""

    def __init__(self, size: int, max_size: int = 64):
        if size > max_size:
            raise ValueError(f"field size {size} above supported cap {max_size}")
        p, k = _prime_power(size)
        if k > 3:
            raise ValueError("only field degrees up to 3 are supported")
        self.size = size
        self.p = p
        self.k = k
        modulus = self._find_irreducible(p, k)
        self._add = [[0] * size for _ in range(size)]
        self._mul = [[0] * size for _ in range(size)]
        for a in range(size):
            for b in range(size):
                self._add[a][b] = self._encode(self._vadd(self._digits(a), self._digits(b)))
                self._mul[a][b] = self._encode(
                    self._vmulmod(self._digits(a), self._digits(b), modulus)
                )

    @staticmethod
    def _find_irreducible(p: int, k: int) -> list[int]:
        """Monic degree-k polynomial over GF(p) with no roots (enough for k <= 3)."""
        if k == 1:
            return [0, 1]
        for tail in product(range(p), repeat=k):
            poly = list(tail) + [1]
            if all(_eval_mod(poly, x, p) != 0 for x in range(p)):
                return poly
        raise AssertionError("no irreducible polynomial found")

    def _digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.k):
            out.append(a % self.p)
            a //= self.p
        return out

    def _encode(self, digits: list[int]) -> int:
        out = 0
        for d in reversed(digits):
            out = out * self.p + d
        return out

    def _vadd(self, a: list[int], b: list[int]) -> list[int]:
        return [(x + y) % self.p for x, y in zip(a, b)]

    def _vmulmod(self, a: list[int], b: list[int], modulus: list[int]) -> list[int]:
        prod = [0] * (2 * self.k - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % self.p
        # reduce by the monic modulus
        for i in range(len(prod) - 1, self.k - 1, -1):
            c = prod[i]
            if c:
                for j in range(self.k + 1):
                    prod[i - self.k + j] = (prod[i - self.k + j] - c * modulus[j]) % self.p
        return prod[: self.k]

    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def neg(self, a: int) -> int:
        for b in range(self.size):
            if self._add[a][b] == 0:
                return b
        raise AssertionError


def _eval_mod(poly: list[int], x: int, p: int) -> int:
    acc = 0
    for c in reversed(poly):
        acc = (acc * x + c) % p
    return acc


def get_field(size: int) -> SmallField:
    if size not in _FIELD_CACHE:
        _FIELD_CACHE[size] = SmallField(size)
    return _FIELD_CACHE[size]


def bruteforce_split_fraction(q: int, n: int, max_degree: int = 12) -> Fraction:
    """Fraction of the q^n monic degree-n polynomials over GF(q) that split.

    Counts by expanding every multiset of n roots and collecting the distinct
    coefficient vectors, so it is independent of any binomial identity.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > max_degree:
        raise ValueError(f"degree {n} above enumeration cap {max_degree}")
    field = get_field(q)
    seen: set[tuple[int, ...]] = set()
    for roots in combinations_with_replacement(range(q), n):
        # expand prod (x - r), coefficients ascending, leading 1
        coeffs = [1]
        for r in roots:
            neg_r = field.neg(r)
            nxt = [0] * (len(coeffs) + 1)
            for i, c in enumerate(coeffs):
                nxt[i + 1] = field.add(nxt[i + 1], c)
                nxt[i] = field.add(nxt[i], field.mul(c, neg_r))
            coeffs = nxt
        seen.add(tuple(reversed(coeffs)))
    return Fraction(len(seen), q**n)
