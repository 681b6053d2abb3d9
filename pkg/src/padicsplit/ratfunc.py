"""Rational functions in q: reduced quotients of integer polynomials.

Values are normalized eagerly after every operation: numerator and
denominator share no polynomial factor, their integer contents are coprime,
and the denominator has positive leading coefficient.  This keeps the
coefficient growth of long recursions bounded and makes equality (and the
printed form) canonical.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _int_gcd

from .polys import IntPolynomial, format_poly, poly_gcd

_ATOM_CHARS = set("0123456789q^")


class RationalFunction:
    __slots__ = ("numer", "denom")

    def __init__(self, numer, denom=None):
        numer = _as_poly(numer)
        denom = IntPolynomial.one() if denom is None else _as_poly(denom)
        if denom.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if numer.is_zero:
            self.numer = IntPolynomial.zero()
            self.denom = IntPolynomial.one()
            return
        g = poly_gcd(numer, denom)
        if g.degree > 0:
            numer = numer.div_exact(g)
            denom = denom.div_exact(g)
        c = _int_gcd(numer.content(), denom.content())
        if denom.leading_coefficient < 0:
            c = -c
        if c != 1:
            numer = IntPolynomial(x // c for x in numer.coeffs)
            denom = IntPolynomial(x // c for x in denom.coeffs)
        self.numer = numer
        self.denom = denom

    # -- constructors ---------------------------------------------------

    @classmethod
    def q(cls) -> "RationalFunction":
        return cls(IntPolynomial.variable())

    @classmethod
    def one(cls) -> "RationalFunction":
        return cls(IntPolynomial.one())

    @classmethod
    def zero(cls) -> "RationalFunction":
        return cls(IntPolynomial.zero())

    @classmethod
    def from_fraction(cls, f: Fraction) -> "RationalFunction":
        return cls(IntPolynomial.constant(f.numerator), IntPolynomial.constant(f.denominator))

    # -- predicates -------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.numer.is_zero

    def __eq__(self, other: object) -> bool:
        other = _try_coerce(other)
        if other is None:
            return NotImplemented
        return self.numer == other.numer and self.denom == other.denom

    def __hash__(self) -> int:
        return hash((self.numer, self.denom))

    def __bool__(self) -> bool:
        return not self.is_zero

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        other = _try_coerce(other)
        if other is None:
            return NotImplemented
        return RationalFunction(
            self.numer * other.denom + other.numer * self.denom,
            self.denom * other.denom,
        )

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.numer, self.denom)

    def __sub__(self, other):
        other = _try_coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _try_coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _try_coerce(other)
        if other is None:
            return NotImplemented
        return RationalFunction(self.numer * other.numer, self.denom * other.denom)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _try_coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.numer * other.denom, self.denom * other.numer)

    def __rtruediv__(self, other):
        other = _try_coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, e: int):
        if e < 0:
            if self.is_zero:
                raise ZeroDivisionError("negative power of zero")
            return RationalFunction(self.denom**-e, self.numer**-e)
        return RationalFunction(self.numer**e, self.denom**e)

    # -- specialization -----------------------------------------------------

    def evaluate(self, x):
        """Value at q = x.  Exact (Fraction) for int/Fraction x; float/complex pass through."""
        nv = self.numer.evaluate(x)
        dv = self.denom.evaluate(x)
        if isinstance(nv, int) and isinstance(dv, int):
            return Fraction(nv, dv)
        if isinstance(nv, Fraction) or isinstance(dv, Fraction):
            return Fraction(nv) / Fraction(dv)
        return nv / dv

    def substitute_inverse(self) -> "RationalFunction":
        """The rational function f(1/q), cleared of negative powers."""
        dn, dd = self.numer.degree, self.denom.degree
        return RationalFunction(
            self.numer.reversed_coefficients() * IntPolynomial.monomial(1, dd),
            self.denom.reversed_coefficients() * IntPolynomial.monomial(1, dn),
        )

    # -- printing ------------------------------------------------------------

    def __str__(self) -> str:
        ns = format_poly(self.numer)
        if self.denom == IntPolynomial.one():
            return ns
        ds = format_poly(self.denom)
        return f"{_wrap(ns)}/{_wrap(ds)}"

    def __repr__(self) -> str:
        return f"RationalFunction({self.numer!r}, {self.denom!r})"


def _as_poly(x) -> IntPolynomial:
    if isinstance(x, IntPolynomial):
        return x
    if isinstance(x, int):
        return IntPolynomial.constant(x)
    raise TypeError(f"cannot build a polynomial from {type(x).__name__}")


def _try_coerce(x):
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, int):
        return RationalFunction(IntPolynomial.constant(x))
    if isinstance(x, Fraction):
        return RationalFunction.from_fraction(x)
    if isinstance(x, IntPolynomial):
        return RationalFunction(x)
    return None


def _wrap(s: str) -> str:
    # atoms like "q", "q^3", "17" stay bare; anything else is parenthesized
    if set(s) <= _ATOM_CHARS:
        return s
    return f"({s})"
