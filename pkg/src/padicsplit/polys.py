"""Dense univariate polynomials over the integers, with exact arithmetic.

The indeterminate is called q throughout this package because these
polynomials mostly live in the residue-field-size parameter.  Coefficients
are arbitrary-precision ints stored in ascending order (index i holds the
coefficient of q^i) with trailing zeros stripped; the zero polynomial has an
empty coefficient tuple and degree -1.

GCDs use the subresultant polynomial remainder sequence, which keeps all
intermediate coefficients integral with controlled growth, and are returned
primitive with positive leading coefficient so equality tests are canonical.
"""

from __future__ import annotations

from math import gcd as _gcd
from typing import Iterable, Sequence


class IntPolynomial:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "IntPolynomial":
        return cls(())

    @classmethod
    def one(cls) -> "IntPolynomial":
        return cls((1,))

    @classmethod
    def constant(cls, c: int) -> "IntPolynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, c: int, k: int) -> "IntPolynomial":
        if k < 0:
            raise ValueError("negative exponent")
        return cls((0,) * k + (c,))

    @classmethod
    def variable(cls) -> "IntPolynomial":
        return cls((0, 1))

    # -- structure ----------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading_coefficient(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def constant_term(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == (IntPolynomial((other,)).coeffs)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    # -- arithmetic ---------------------------------------------------

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __add__(self, other: "IntPolynomial | int") -> "IntPolynomial":
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    __radd__ = __add__

    def __sub__(self, other: "IntPolynomial | int") -> "IntPolynomial":
        return self + (-_coerce(other))

    def __rsub__(self, other: int) -> "IntPolynomial":
        return _coerce(other) + (-self)

    def __mul__(self, other: "IntPolynomial | int") -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(tuple(c * other for c in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial(())
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "IntPolynomial":
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = IntPolynomial.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def evaluate(self, x):
        """Horner evaluation; works for int, Fraction, float and complex x."""
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(tuple(i * c for i, c in enumerate(self.coeffs))[1:])

    # -- integral structure --------------------------------------------

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = _gcd(g, c)
        return g

    def primitive_positive(self) -> "IntPolynomial":
        """Divide out the content and normalize the leading coefficient > 0."""
        if self.is_zero:
            return self
        g = self.content()
        if self.leading_coefficient < 0:
            g = -g
        return IntPolynomial(tuple(c // g for c in self.coeffs))

    def trailing_zero_order(self) -> int:
        """Order of vanishing at q = 0 (degree for the zero polynomial is undefined)."""
        if self.is_zero:
            raise ValueError("zero polynomial")
        k = 0
        while self.coeffs[k] == 0:
            k += 1
        return k

    def shift_down(self, k: int) -> "IntPolynomial":
        """Exact division by q^k."""
        if any(c != 0 for c in self.coeffs[:k]):
            raise ValueError("not divisible by q^%d" % k)
        return IntPolynomial(self.coeffs[k:])

    def reversed_coefficients(self) -> "IntPolynomial":
        """q^deg * p(1/q); the zero polynomial maps to itself."""
        return IntPolynomial(tuple(reversed(self.coeffs)))

    def div_exact(self, d: "IntPolynomial") -> "IntPolynomial":
        """Quotient self / d, which must divide exactly over the integers."""
        if d.is_zero:
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero:
            return self
        rem = list(self.coeffs)
        dc = d.coeffs
        dl = d.leading_coefficient
        n, m = len(rem), len(dc)
        if n < m:
            raise ValueError("does not divide")
        out = [0] * (n - m + 1)
        for k in range(n - m, -1, -1):
            top = rem[m - 1 + k]
            if top % dl != 0:
                raise ValueError("does not divide")
            c = top // dl
            out[k] = c
            if c:
                for j in range(m):
                    rem[j + k] -= c * dc[j]
        if any(rem):
            raise ValueError("does not divide")
        return IntPolynomial(out)

    def divides(self, other: "IntPolynomial") -> bool:
        try:
            other.div_exact(self)
            return True
        except (ValueError, ZeroDivisionError):
            return False

    # -- printing -------------------------------------------------------

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)!r})"


def _coerce(x) -> IntPolynomial:
    if isinstance(x, IntPolynomial):
        return x
    if isinstance(x, int):
        return IntPolynomial((x,))
    raise TypeError(f"cannot coerce {type(x).__name__} to IntPolynomial")


def format_poly(p: IntPolynomial, var: str = "q") -> str:
    """Canonical human/golden-file form: descending terms, explicit * and ^."""
    if p.is_zero:
        return "0"
    parts: list[str] = []
    for i in range(p.degree, -1, -1):
        c = p[i]
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        elif i == 1:
            body = var if mag == 1 else f"{mag}*{var}"
        else:
            body = f"{var}^{i}" if mag == 1 else f"{mag}*{var}^{i}"
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


def _pseudo_rem(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Pseudo-remainder: remainder of lc(b)^(deg a - deg b + 1) * a by b."""
    da, db = a.degree, b.degree
    lb = b.leading_coefficient
    rem = list(a.coeffs)
    bc = b.coeffs
    for k in range(da - db, -1, -1):
        top = rem[db + k]
        # rem <- lb*rem - top*q^k*b ; multiply every step so the overall
        # scaling is exactly lb^(da-db+1)
        for i in range(len(rem)):
            rem[i] *= lb
        if top:
            for j in range(db + 1):
                rem[j + k] -= top * bc[j]
        assert rem[db + k] == 0
    return IntPolynomial(rem[:db] if db > 0 else ())


def poly_gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Primitive gcd with positive leading coefficient (subresultant PRS)."""
    if a.is_zero and b.is_zero:
        raise ValueError("gcd of zero polynomials")
    if a.is_zero:
        return b.primitive_positive()
    if b.is_zero:
        return a.primitive_positive()
    A, B = (a, b) if a.degree >= b.degree else (b, a)
    g = h = 1
    while True:
        d = A.degree - B.degree
        R = _pseudo_rem(A, B)
        if R.is_zero:
            return B.primitive_positive()
        if B.degree == 0:
            return IntPolynomial.one()
        divisor = g * h**d
        A, B = B, IntPolynomial(tuple(c // divisor for c in R.coeffs))
        g = A.leading_coefficient
        if d == 0:
            pass
        elif d == 1:
            h = g
        else:
            h = g**d // h ** (d - 1)
