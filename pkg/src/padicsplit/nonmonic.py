"""Splitting probabilities for polynomials that need not be monic.

r^nm_n is the probability that a random polynomial of degree <= n (all n+1
coefficients drawn uniformly) is a product of n linear forms.  Conditioning
on the number of leading coefficients that vanish mod the maximal ideal
relates it to the monic table:

    r^nm_n = (1 - q^{-n-1})^{-1} * ((q-1)/q) * sum_{0<=j<=n} r_{n-j} s_j.

Equivalently, with fnm_n = (1 - q^{-n-1}) r^nm_n, the series of fnm
coefficients equals ((q-1)/q) G^{q+1}.  Three independent computations are
provided (direct recursion, the Euler-style recurrence for G^{q+1}, and the
projective-line composition sum) plus the series identity check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .ratfunc import RationalFunction
from .series import series_pow
from .splitprob import SplitTable, splitting_sequence
from .util import CapExceededError, partitions, placement_count


@dataclass(frozen=True)
class NonMonicTable:
    """Exact r^nm_n values and the matching (1 - q^{-n-1}) r^nm_n coefficients."""

    q: int
    values: tuple[Fraction, ...]
    fnm_coeffs: tuple[Fraction, ...]

    @property
    def n_max(self) -> int:
        return len(self.values) - 1

    def r(self, n: int) -> Fraction:
        return self.values[n]


def _nonmonic_values(q, n_max, r, s, one):
    """Generic direct recursion; r, s are the monic sequences over the same scalars."""
    qinv = one / q
    scale = (q - one) / q
    values = []
    for n in range(n_max + 1):
        acc = one - one
        for j in range(n + 1):
            acc = acc + r[n - j] * s[j]
        values.append(scale * acc / (one - qinv ** (n + 1)))
    return values


def nonmonic_rn(q: int, n_max: int, monic: SplitTable) -> NonMonicTable:
    """Table of r^nm_0..r^nm_N from the leading-coefficient conditioning."""
    if monic.q != q or monic.n_max < n_max:
        raise ValueError("monic table must cover 0..n_max at the same q")
    one = Fraction(1)
    vals = _nonmonic_values(
        Fraction(q), n_max, monic.values, monic.svalues, one
    )
    fnm = tuple(
        (1 - Fraction(q) ** -(n + 1)) * v for n, v in enumerate(vals)
    )
    return NonMonicTable(q, tuple(vals), fnm)


def nonmonic_euler(q: int, n_max: int, monic: SplitTable | None = None) -> NonMonicTable:
    """Alternative computation from the recurrence for G^{q+1}.

    Setting fnm_n = (1 - q^{-n-1}) r^nm_n, the identity
    sum_j (n - (q+2) j) fnm_{n-j} s_j = 0 holds; only the j = 0 term
    involves fnm_n, so the table solves forward.
    """
    if monic is None:
        monic = SplitTable.compute(q, n_max)
    if monic.q != q or monic.n_max < n_max:
        raise ValueError("monic table must cover 0..n_max at the same q")
    qf = Fraction(q)
    s = monic.svalues
    fnm: list[Fraction] = [1 - qf**-1]
    for n in range(1, n_max + 1):
        acc = Fraction(0)
        for j in range(1, n + 1):
            acc += (n - (q + 2) * j) * fnm[n - j] * s[j]
        fnm.append(-acc / n)
    values = tuple(f / (1 - qf ** -(n + 1)) for n, f in enumerate(fnm))
    return NonMonicTable(q, values, tuple(fnm))


def theorem_nm_sum(q: int, n: int, monic: SplitTable) -> Fraction:
    """r^nm_n from the sum over compositions indexed by the projective line.

    The index set has q + 1 elements; compositions are grouped by their
    multiset of parts exactly as in the monic composition sum.
    """
    if q < 2:
        raise ValueError("q must be at least 2")
    if n < 0:
        raise ValueError("n must be nonnegative")
    if monic.q != q or monic.n_max < n:
        raise ValueError("monic table must cover 0..n at the same q")
    total = Fraction(0)
    for part in partitions(n, q + 1):
        term = Fraction(placement_count(q + 1, part))
        for p in part:
            term *= monic.s(p)
        total += term
    return (Fraction(q - 1, q) * total) / (1 - Fraction(q) ** -(n + 1))


def nonmonic_series_identity(q: int, n_max: int) -> bool:
    """Exact coefficient-wise check of fnm series == ((q-1)/q) G^{q+1}."""
    monic = SplitTable.compute(q, n_max)
    table = nonmonic_rn(q, n_max, monic)
    g = monic.g_series(n_max + 1)
    rhs = series_pow(g, q + 1).scale(Fraction(q - 1, q))
    return tuple(rhs.coeffs) == table.fnm_coeffs


def symbolic_nonmonic(n_max: int, ceiling: int = 12) -> tuple[RationalFunction, ...]:
    """r^nm_n as rational functions of the indeterminate q."""
    if n_max > ceiling:
        raise CapExceededError(
            f"symbolic non-monic table requested to n={n_max}, above the ceiling {ceiling}"
        )
    qrf = RationalFunction.q()
    r, s = splitting_sequence(qrf, n_max)
    return tuple(_nonmonic_values(qrf, n_max, r, s, RationalFunction.one()))
