"""Truncated power series with exact rational coefficients.

The truncation order is part of the value: a series of order N carries the
coefficients of t^0 .. t^(N-1), and combining series of different orders is
an error rather than a silent truncation.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence


class PowerSeries:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable, order: int | None = None):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        if order is not None:
            if order < len(cs):
                raise ValueError("more coefficients than the truncation order")
            cs.extend([Fraction(0)] * (order - len(cs)))
        self.coeffs = tuple(cs)

    @classmethod
    def one(cls, order: int) -> "PowerSeries":
        if order < 1:
            raise ValueError("order must be positive to represent 1")
        return cls([Fraction(1)], order)

    @classmethod
    def zero(cls, order: int) -> "PowerSeries":
        return cls([], order)

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def _check(self, other: "PowerSeries") -> None:
        if self.order != other.order:
            raise ValueError(
                f"truncation orders differ: {self.order} != {other.order}"
            )

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        self._check(other)
        return PowerSeries([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "PowerSeries") -> "PowerSeries":
        self._check(other)
        return PowerSeries([a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __mul__(self, other: "PowerSeries") -> "PowerSeries":
        return series_mul(self, other)

    def scale(self, c) -> "PowerSeries":
        c = Fraction(c)
        return PowerSeries([c * a for a in self.coeffs])

    def __repr__(self) -> str:
        return f"PowerSeries({[str(c) for c in self.coeffs]})"


def series_mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """Truncated Cauchy product; orders must match."""
    a._check(b)
    n = a.order
    out = [Fraction(0)] * n
    for i, ca in enumerate(a.coeffs):
        if not ca:
            continue
        for j in range(n - i):
            cb = b.coeffs[j]
            if cb:
                out[i + j] += ca * cb
    return PowerSeries(out)


def series_pow(g: PowerSeries, e: int) -> PowerSeries:
    """g multiplied with itself e times under the common truncation."""
    if e < 0:
        raise ValueError("negative series power")
    if e == 0:
        if g.order == 0:
            raise ValueError("cannot represent 1 at truncation order 0")
        return PowerSeries.one(g.order)
    out = g
    for _ in range(e - 1):
        out = series_mul(out, g)
    return out
