"""Dense univariate polynomials over an exact coefficient field.

Used as the scalar layer for rational functions and for commutative
factor searches.  Coefficients are stored ascending by exponent with the
leading one nonzero; the zero polynomial has an empty list.
"""

from __future__ import annotations

from typing import Optional

from .errors import FieldMismatch
from .field import Field, Scalar


class UniPoly:
    """A polynomial in one variable over a Field."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs):
        cs = [field.scalar(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, field: Field, c) -> "UniPoly":
        return cls(field, [c])

    @classmethod
    def x(cls, field: Field) -> "UniPoly":
        return cls(field, [0, 1])

    def degree(self) -> Optional[int]:
        """Total degree, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0].is_one()

    def leading(self) -> Scalar:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, i: int) -> Scalar:
        return self.coeffs[i] if i < len(self.coeffs) else self.field.zero()

    def _check(self, other: "UniPoly"):
        if self.field != other.field:
            raise FieldMismatch("univariate operands over different fields")

    def __add__(self, other: "UniPoly") -> "UniPoly":
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(self.field, [self.coeff(i) + other.coeff(i) for i in range(n)])

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __neg__(self) -> "UniPoly":
        return UniPoly(self.field, [-c for c in self.coeffs])

    def __mul__(self, other) -> "UniPoly":
        if isinstance(other, (int, Scalar)):
            c = self.field.scalar(other)
            return UniPoly(self.field, [a * c for a in self.coeffs])
        self._check(other)
        if self.is_zero() or other.is_zero():
            return UniPoly(self.field, [])
        out = [self.field.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UniPoly(self.field, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "UniPoly":
        result = UniPoly.constant(self.field, 1)
        for _ in range(n):
            result = result * self
        return result

    def __divmod__(self, other: "UniPoly"):
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        dd = other.degree()
        lead_inv = other.leading().inverse()
        quot = [self.field.zero()] * max(len(rem) - dd, 0)
        while len(rem) - 1 >= dd and rem:
            k = len(rem) - 1 - dd
            factor = rem[-1] * lead_inv
            quot[k] = factor
            for j, b in enumerate(other.coeffs):
                rem[k + j] = rem[k + j] - factor * b
            while rem and rem[-1].is_zero():
                rem.pop()
        return UniPoly(self.field, quot), UniPoly(self.field, rem)

    def __floordiv__(self, other: "UniPoly") -> "UniPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "UniPoly") -> "UniPoly":
        return divmod(self, other)[1]

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        return self * self.leading().inverse()

    def scale_arg(self, q: Scalar) -> "UniPoly":
        """The substitution x -> q*x: coefficient a_i becomes a_i * q^i."""
        return UniPoly(self.field, [c * q**i for i, c in enumerate(self.coeffs)])

    def eval(self, point: Scalar) -> Scalar:
        acc = self.field.zero()
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, UniPoly)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.field, self.coeffs))

    def __str__(self) -> str:
        return self.to_str("x")

    def to_str(self, var: str) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c.is_zero():
                continue
            mag, neg = _magnitude(c)
            if i == 0:
                body = str(mag)
            elif mag.is_one():
                body = var if i == 1 else f"{var}^{i}"
            else:
                body = f"{mag}*{var}" if i == 1 else f"{mag}*{var}^{i}"
            if not parts:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"UniPoly({self})"


def _magnitude(c: Scalar):
    """Split a scalar into (magnitude, is_negative) for rendering."""
    if c.field.p is None and c.value < 0:
        return -c, True
    return c, False


def gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic greatest common divisor."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def monic_polys(field: Field, degree: int):
    """All monic polynomials of the given degree over a prime field, ascending."""
    if field.p is None:
        raise ValueError("cannot enumerate over the rationals")
    p = field.p
    for n in range(p**degree):
        digits = []
        m = n
        for _ in range(degree):
            digits.append(m % p)
            m //= p
        yield UniPoly(field, digits + [1])


def find_factor(f: UniPoly) -> Optional[tuple]:
    """A proper factorization (g, h) of f over a prime field, or None.

    Exhaustive trial division by monic polynomials of degree up to
    deg(f)//2; None means f is irreducible (for deg f >= 1).
    """
    d = f.degree()
    if d is None or d < 1:
        raise ValueError("factor search needs degree >= 1")
    for k in range(1, d // 2 + 1):
        for g in monic_polys(f.field, k):
            q, r = divmod(f, g)
            if r.is_zero():
                return g, q
    return None


def rational_factor(f: UniPoly) -> Optional[tuple]:
    """A proper factorization (g, h) of f over the rationals, or None.

    Delegates to sympy's univariate factorization; None means irreducible.
    """
    if f.field.p is not None:
        raise ValueError("rational_factor is for the rational field")
    d = f.degree()
    if d is None or d < 1:
        raise ValueError("factor search needs degree >= 1")
    import sympy

    t = sympy.Symbol("t")
    expr = sum(sympy.Rational(c.value) * t**i for i, c in enumerate(f.coeffs))
    _, factors = sympy.factor_list(sympy.Poly(expr, t))
    proper = []
    for poly, mult in factors:
        proper.extend([poly] * mult)
    if len(proper) <= 1:
        return None
    g = _from_sympy(f.field, proper[0], t)
    h, r = divmod(f, g)
    assert r.is_zero()
    return g, h


def _from_sympy(field: Field, poly, t) -> UniPoly:
    from fractions import Fraction

    coeffs = poly.as_poly(t).all_coeffs()[::-1]
    return UniPoly(field, [Fraction(str(c)) for c in coeffs])
