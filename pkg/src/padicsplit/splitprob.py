"""Splitting probabilities for random monic polynomials over a complete DVR.

r_n is the probability that a random monic polynomial of degree n over a
complete discrete valuation ring with residue field of size q factors into
linear factors, and s_n = r_n / q^C(n+1,2) is the matching generating-series
coefficient.  This module computes the table several independent ways:

* a sum over compositions of n into q parts, solved for r_n;
* a linear recurrence obtained from the power identity F = G^q by
  logarithmic differentiation, which is the workhorse;
* symbolically, with q an indeterminate, yielding r_n(q) as a reduced
  rational function;
* over the residue field itself (closed form and exhaustive enumeration).

The recurrence driver is generic in its scalar type: Fraction for exact
integer or rational q, RationalFunction for symbolic q, float/complex for
the numeric work in the asymptotics module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .ffield import bruteforce_split_fraction
from .polys import IntPolynomial, poly_gcd
from .ratfunc import RationalFunction
from .series import PowerSeries
from .util import CapExceededError, partitions, placement_count

DEFAULT_SYMBOLIC_CEILING = 12


def _one_like(q):
    if isinstance(q, bool):
        raise TypeError("q must be a number")
    if isinstance(q, int):
        return Fraction(1)
    if isinstance(q, Fraction):
        return Fraction(1)
    if isinstance(q, RationalFunction):
        return RationalFunction.one()
    if isinstance(q, complex):
        return complex(1)
    if isinstance(q, float):
        return 1.0
    raise TypeError(f"unsupported scalar type {type(q).__name__}")


def splitting_sequence(q, n_max: int):
    """(r_0..r_N, s_0..s_N) over the scalar ring of q, via the recurrence.

    Solving the coefficient identity sum_j (n - (q+1) j) r_{n-j} s_j = 0 for
    r_n gives

        r_n = - sum_{1<=j<=n-1} (n - (q+1) j) r_{n-j} s_j
              / ( n (1 - q^{1 - C(n+1,2)}) ),

    valid for n >= 2.  All powers of q are taken with negative exponents so
    float/complex runs underflow harmlessly instead of overflowing.
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    one = _one_like(q)
    q = one * q
    qinv = one / q
    r = [one, one]
    s = [one, qinv]
    for n in range(2, n_max + 1):
        acc = one - one
        for j in range(1, n):
            coeff = n * one - (q + one) * j
            acc = acc + coeff * r[n - j] * s[j]
        w = qinv ** comb(n + 1, 2)
        rn = -acc / (n * (one - q * w))
        r.append(rn)
        s.append(rn * w)
    return r[: n_max + 1], s[: n_max + 1]


@dataclass(frozen=True)
class SplitTable:
    """Exact r_n and s_n values at a fixed integer residue size q."""

    q: int
    values: tuple[Fraction, ...]
    svalues: tuple[Fraction, ...]

    @classmethod
    def compute(cls, q: int, n_max: int) -> "SplitTable":
        if q < 2:
            raise ValueError("q must be at least 2")
        r, s = splitting_sequence(q, n_max)
        return cls(q, tuple(r), tuple(s))

    @property
    def n_max(self) -> int:
        return len(self.values) - 1

    def r(self, n: int) -> Fraction:
        return self.values[n]

    def s(self, n: int) -> Fraction:
        return self.svalues[n]

    def extend(self, n_max: int) -> "SplitTable":
        """Table covering 0..n_max, reusing the existing prefix."""
        if n_max <= self.n_max:
            return self
        # the recurrence is serial; recompute from scratch but verify prefix
        new = SplitTable.compute(self.q, n_max)
        assert new.values[: self.n_max + 1] == self.values
        return new

    def g_series(self, order: int) -> PowerSeries:
        if order > self.n_max + 1:
            raise ValueError("table too short for requested order")
        return PowerSeries(self.svalues[:order])

    def f_series(self, order: int) -> PowerSeries:
        if order > self.n_max + 1:
            raise ValueError("table too short for requested order")
        return PowerSeries(self.values[:order])


def corollary_recursion(q: int, n_max: int) -> SplitTable:
    """r_0..r_N by the Euler-style recurrence (the fast route)."""
    return SplitTable.compute(q, n_max)


def theorem1_rn(q: int, n: int, prior: SplitTable) -> Fraction:
    """r_n from the composition sum, solved for the r_n terms on the right.

    The sum runs over compositions d of n into q nonnegative parts; the q
    compositions with a part equal to n each contribute q^-C(n+1,2) r_n, and
    the rest only involve r_0..r_{n-1}.  Compositions are grouped by their
    multiset of parts to keep the term count polynomial.
    """
    if q < 2:
        raise ValueError("q must be at least 2")
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n <= 1:
        return Fraction(1)
    if prior.q != q or prior.n_max < n - 1:
        raise ValueError("prior table must cover r_0..r_{n-1} at the same q")
    total = Fraction(0)
    for part in partitions(n, q, n - 1):
        weight = placement_count(q, part)
        term = Fraction(weight)
        for p in part:
            term *= prior.s(p)
        total += term
    return total / (1 - Fraction(q) ** (1 - comb(n + 1, 2)))


@dataclass(frozen=True)
class SymbolicSplitTable:
    """r_n(q) as reduced rational functions of the indeterminate q."""

    entries: tuple[RationalFunction, ...]

    @classmethod
    def compute(cls, n_max: int, ceiling: int = DEFAULT_SYMBOLIC_CEILING) -> "SymbolicSplitTable":
        if n_max > ceiling:
            raise CapExceededError(
                f"symbolic table requested to n={n_max}, above the ceiling {ceiling}; "
                "raise the ceiling explicitly if you accept the cost"
            )
        r, _ = splitting_sequence(RationalFunction.q(), n_max)
        return cls(tuple(r))

    @property
    def n_max(self) -> int:
        return len(self.entries) - 1

    def evaluate(self, q: int, n: int) -> Fraction:
        return self.entries[n].evaluate(q)


def symbolic_rn(n_max: int, ceiling: int = DEFAULT_SYMBOLIC_CEILING) -> SymbolicSplitTable:
    return SymbolicSplitTable.compute(n_max, ceiling)


def check_functional_equation(table: SymbolicSplitTable, n: int) -> bool:
    """Exact test of r_n(q) == r_n(1/q) * q^C(n,2)."""
    e = table.entries[n]
    lhs = e.substitute_inverse() * RationalFunction(IntPolynomial.monomial(1, comb(n, 2)))
    return lhs == e


@dataclass(frozen=True)
class PoleReport:
    n: int
    q_power: int
    unity_orders: tuple[int, ...]
    residual_degree: int
    poles_ok: bool
    vanish_order: int
    vanish_required: int
    vanish_ok: bool

    @property
    def passed(self) -> bool:
        return self.poles_ok and self.vanish_ok


def check_pole_locations(table: SymbolicSplitTable, n: int) -> PoleReport:
    """Verify poles of r_n sit at zero or roots of unity, and the zero at 0.

    The squarefree part of the denominator is peeled by gcds against q and
    q^m - 1 for m up to its degree; anything left over would witness a pole
    away from the roots of unity.  The numerator must vanish at 0 to order at
    least C(n,2).
    """
    e = table.entries[n]
    denom = e.denom
    if denom.degree == 0:
        sqfree = IntPolynomial.one()
    else:
        sqfree = denom.div_exact(poly_gcd(denom, denom.derivative())).primitive_positive()
    q_power = 0
    if not sqfree.is_zero and sqfree.constant_term == 0:
        q_power = sqfree.trailing_zero_order()
        sqfree = sqfree.shift_down(q_power)
    unity: list[int] = []
    for m in range(1, sqfree.degree + 1):
        if sqfree.degree <= 0:
            break
        g = poly_gcd(sqfree, IntPolynomial.monomial(1, m) - 1)
        if g.degree > 0:
            sqfree = sqfree.div_exact(g)
            unity.append(m)
    poles_ok = sqfree.degree <= 0
    if e.numer.is_zero:
        raise ValueError("r_n should never be identically zero")
    vanish = e.numer.trailing_zero_order()
    required = comb(n, 2)
    return PoleReport(
        n=n,
        q_power=q_power,
        unity_orders=tuple(unity),
        residual_degree=max(sqfree.degree, 0),
        poles_ok=poles_ok,
        vanish_order=vanish,
        vanish_required=required,
        vanish_ok=vanish >= required,
    )


def limit_inverse_factorial(table: SymbolicSplitTable, n: int) -> Fraction:
    """Leading-coefficient ratio of r_n(q); the large-q limit, equal to 1/n!."""
    e = table.entries[n]
    if e.numer.degree != e.denom.degree:
        raise ValueError(
            f"numerator degree {e.numer.degree} != denominator degree {e.denom.degree}"
        )
    return Fraction(e.numer.leading_coefficient, e.denom.leading_coefficient)


def finite_field_rbar(q: int, n: int) -> Fraction:
    """Probability that a random monic degree-n polynomial over GF(q) splits."""
    if q < 2:
        raise ValueError("q must be at least 2")
    if n < 0:
        raise ValueError("n must be nonnegative")
    return Fraction(comb(n + q - 1, q - 1), q**n)


def ff_bruteforce_rbar(q: int, n: int) -> Fraction:
    """Exhaustive-enumeration version of finite_field_rbar (independent oracle)."""
    return bruteforce_split_fraction(q, n)


def inverse_factorial(n: int) -> Fraction:
    return Fraction(1, factorial(n))
