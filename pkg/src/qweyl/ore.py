"""Skew-polynomial calculus over the rational functions in x.

The twist is the substitution sigma: x -> q*x together with the
difference quotient delta(p) = (sigma(p) - p) / ((q-1)x), extended to
fractions by the twisted Leibniz rule.  Skew polynomials in t multiply
under t*r = sigma(r)*t + delta(r); dropping delta gives the plain twisted
ring used after recentring at q = -1.  This provides a second,
independent route to the q = -1 reducibility results.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from .algebra import WeylAlgebra, WeylPoly
from .errors import (
    ContextMismatch,
    QIsOne,
    QNotMinusOne,
    WrongShape,
    ZeroLeadingCoefficient,
)
from .field import Field, Scalar, q_int, square_root
from .unipoly import UniPoly, gcd


class RatFunc:
    """A rational function in x: num/den, reduced, with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: UniPoly, den: Optional[UniPoly] = None):
        if den is None:
            den = UniPoly.constant(num.field, 1)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            den = UniPoly.constant(num.field, 1)
        else:
            g = gcd(num, den)
            if g.degree():
                num, den = num // g, den // g
            lead_inv = den.leading().inverse()
            num, den = num * lead_inv, den * lead_inv
        self.num = num
        self.den = den

    @classmethod
    def from_scalar(cls, field: Field, c) -> "RatFunc":
        return cls(UniPoly.constant(field, c))

    @classmethod
    def x(cls, field: Field) -> "RatFunc":
        return cls(UniPoly.x(field))

    @property
    def field(self) -> Field:
        return self.num.field

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def _coerce(self, other) -> "RatFunc":
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, UniPoly):
            return RatFunc(other)
        if isinstance(other, (int, Scalar)):
            return RatFunc.from_scalar(self.field, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Scalar, UniPoly)):
            other = self._coerce(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __str__(self) -> str:
        if self.den.is_one():
            return str(self.num)
        num = str(self.num)
        den = str(self.den)
        num = f"({num})" if (" " in num or "/" in num) else num
        den = f"({den})" if (" " in den or "/" in den) else den
        return f"{num}/{den}"

    def __repr__(self) -> str:
        return f"RatFunc({self})"


def sigma_q(r: RatFunc, q: Scalar) -> RatFunc:
    """The substitution x -> q*x applied to numerator and denominator."""
    return RatFunc(r.num.scale_arg(q), r.den.scale_arg(q))


def delta_poly(p: UniPoly, q: Scalar) -> UniPoly:
    """(sigma(p) - p) / ((q-1)x) on polynomials: a_i x^i -> a_i [i]_q x^(i-1)."""
    if q.is_one():
        raise QIsOne("the difference quotient is undefined at q = 1")
    return UniPoly(p.field, [p.coeffs[i] * q_int(i, q) for i in range(1, len(p.coeffs))])


def delta_q(r: RatFunc, q: Scalar) -> RatFunc:
    """The difference quotient extended to fractions.

    Forced by the twisted Leibniz rule delta(r*s) = delta(r)*s +
    sigma(r)*delta(s):  delta(n/d) = (delta(n) - sigma(n/d)*delta(d)) / d.
    """
    if q.is_one():
        raise QIsOne("the difference quotient is undefined at q = 1")
    dn = RatFunc(delta_poly(r.num, q))
    if r.is_polynomial():
        return dn
    dd = RatFunc(delta_poly(r.den, q))
    return (dn - sigma_q(r, q) * dd) / RatFunc(r.den)


class SkewRing:
    """Skew polynomials in t over the rational functions in x.

    with_delta=True gives the full twist t*r = sigma(r)*t + delta(r);
    with_delta=False gives the plain twisted ring t*r = sigma(r)*t.
    """

    def __init__(self, field: Field, q, with_delta: bool = True):
        self.field = field
        self.q = field.scalar(q)
        if self.q.is_zero():
            raise ZeroDivisionError("q must be nonzero")
        if with_delta and self.q.is_one():
            raise QIsOne("the full twist needs q != 1")
        self.with_delta = with_delta

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SkewRing)
            and self.field == other.field
            and self.q == other.q
            and self.with_delta == other.with_delta
        )

    def __hash__(self) -> int:
        return hash((self.field, self.q, self.with_delta))

    def coerce(self, value) -> RatFunc:
        if isinstance(value, RatFunc):
            return value
        if isinstance(value, UniPoly):
            return RatFunc(value)
        return RatFunc.from_scalar(self.field, value)

    def poly(self, coeffs) -> "SkewPoly":
        return SkewPoly(self, [self.coerce(c) for c in coeffs])

    def zero(self) -> "SkewPoly":
        return self.poly([])

    def one(self) -> "SkewPoly":
        return self.poly([1])

    def t(self) -> "SkewPoly":
        return self.poly([0, 1])

    def sigma(self, r: RatFunc) -> RatFunc:
        return sigma_q(r, self.q)

    def delta(self, r: RatFunc) -> RatFunc:
        if not self.with_delta:
            return RatFunc.from_scalar(self.field, 0)
        return delta_q(r, self.q)


class SkewPoly:
    """An element sum_i r_i t^i; coefficients are rational functions in x."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: SkewRing, coeffs: List[RatFunc]):
        cs = list(coeffs)
        while cs and cs[-1].is_zero():
            cs.pop()
        self.ring = ring
        self.coeffs = tuple(cs)

    def degree(self) -> Optional[int]:
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> RatFunc:
        if i < len(self.coeffs):
            return self.coeffs[i]
        return RatFunc.from_scalar(self.ring.field, 0)

    def _check(self, other: "SkewPoly"):
        if self.ring != other.ring:
            raise ContextMismatch("skew polynomials from different rings")

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return SkewPoly(self.ring, [self.coeff(i) + other.coeff(i) for i in range(n)])

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return SkewPoly(self.ring, [-c for c in self.coeffs])

    def _coerce(self, other):
        if isinstance(other, SkewPoly):
            self._check(other)
            return other
        if isinstance(other, (int, Scalar, UniPoly, RatFunc)):
            return self.ring.poly([other])
        return NotImplemented

    def _t_shift(self) -> "SkewPoly":
        """Left multiplication by t."""
        ring = self.ring
        out = [RatFunc.from_scalar(ring.field, 0)] * (len(self.coeffs) + 1)
        for j, r in enumerate(self.coeffs):
            out[j + 1] = out[j + 1] + ring.sigma(r)
            if ring.with_delta:
                out[j] = out[j] + ring.delta(r)
        return SkewPoly(ring, out)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        ring = self.ring
        result = ring.zero()
        shifted = other
        for i, r in enumerate(self.coeffs):
            if i > 0:
                shifted = shifted._t_shift()
            if not r.is_zero():
                result = result + SkewPoly(ring, [r * c for c in shifted.coeffs])
        return result

    def __rmul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self

    def __eq__(self, other) -> bool:
        if not isinstance(other, SkewPoly):
            return NotImplemented
        return self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.ring, self.coeffs))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            r = self.coeffs[i]
            if r.is_zero():
                continue
            body = str(r)
            if i > 0:
                tpow = "t" if i == 1 else f"t^{i}"
                if body == "1":
                    body = tpow
                else:
                    if " " in body or "/" in body:
                        body = f"({body})"
                    body = f"{body}*{tpow}"
            parts.append(body)
        return " + ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"SkewPoly({self})"


def weyl_to_skew(ring: SkewRing, f: WeylPoly) -> SkewPoly:
    """Reinterpret a normal-ordered polynomial as a skew polynomial in y.

    Requires the full twisted ring over the same field with the same q; the
    normal order puts coefficients in x on the left, matching sum r_i(x) y^i.
    """
    if not ring.with_delta:
        raise ContextMismatch("the y-ring carries the full twist")
    if ring.field != f.algebra.field or ring.q != f.algebra.q:
        raise ContextMismatch("ring and algebra disagree on field or q")
    deg_y = max((j for _, j in f.terms), default=0)
    coeffs = []
    for j in range(deg_y + 1):
        xs = {i: c for (i, jj), c in f.terms.items() if jj == j}
        top = max(xs, default=0)
        coeffs.append(RatFunc(UniPoly(ring.field, [xs.get(i, 0) for i in range(top + 1)])))
    return SkewPoly(ring, coeffs)


# -- recentring at q = -1 ------------------------------------------------------


def recenter_q_minus_1(f: WeylPoly) -> SkewPoly:
    """The image of f = y^2 + a*x^2 + k in the plain twisted ring at q = -1.

    The full twist is inner at q = -1, so y -> t + (2x)^(-1) identifies the
    two rings over the rational functions; the image is t^2 - p with
    p = -(a*x^2 + (2x)^(-2) + k).  The construction is verified internally
    by substituting back and comparing with f.
    """
    alg = f.algebra
    if alg.q != -1:
        raise QNotMinusOne("recentring is specific to q = -1")
    if not set(f.terms) <= {(0, 2), (2, 0), (0, 0)} or not f.coeff(0, 2).is_one():
        raise WrongShape("expected y^2 + a*x^2 + k with monic y^2")
    field = alg.field
    a, k = f.coeff(2, 0), f.coeff(0, 0)
    x = UniPoly.x(field)
    four_x2 = RatFunc(x * x * 4)
    p = -(RatFunc(x * x * a) + four_x2.inverse() + RatFunc.from_scalar(field, k))
    sigma_ring = SkewRing(field, alg.q, with_delta=False)
    image = sigma_ring.poly([-p, 0, 1])
    # substituting t = y - (2x)^(-1) back into the image must recover f
    full_ring = SkewRing(field, alg.q, with_delta=True)
    h = RatFunc(x * 2).inverse()
    y_minus_h = full_ring.poly([-h, 1])
    recovered = y_minus_h * y_minus_h - full_ring.poly([p])
    assert recovered == weyl_to_skew(full_ring, f), "recentring self-check failed"
    return image


def decide_t2_minus_v_reducible(algebra: WeylAlgebra, a, k) -> bool:
    """Whether the recentred image of y^2 + a*x^2 + k splits at q = -1.

    The image t^2 - p has p = -g/(4x^2) with g = 4a*x^4 + 4k*x^2 + 1, and
    splitting is controlled by how the quartic g factors over the field:

      * g is 4a times the square of a monic quadratic exactly when a = k^2
        (equivalently the z-quadratic 4a*z^2 + 4k*z + 1, z = x^2, has a
        double root): the image splits;
      * g factors into a mirror pair (x^2 + m*x + beta)(x^2 - m*x + beta),
        which forces beta^2 = 1/(4a) and m^2 = 2*beta - k/a: the image
        splits (this covers the fully split quartic as well);
      * otherwise no factor shape admits a splitting and the image is
        irreducible.
    """
    field = algebra.field
    a, k = field.scalar(a), field.scalar(k)
    if algebra.q != -1:
        raise QNotMinusOne("the quartic analysis is specific to q = -1")
    if a.is_zero():
        raise ZeroLeadingCoefficient("the quartic analysis needs a != 0")
    if k * k == a:
        return True
    beta = square_root((4 * a).inverse() * field.one())
    if beta is not None:
        for b in (beta, -beta):
            if square_root(2 * b - k / a) is not None:
                return True
    return False


def w_from_right_factor(right: WeylPoly) -> RatFunc:
    """The fraction w with right = beta*(y + w) for an affine-linear factor
    right = alpha*x + beta*y + gamma (beta must be nonzero)."""
    alg = right.algebra
    beta = right.coeff(0, 1)
    if beta.is_zero() or right.total_degree() != 1:
        raise WrongShape("expected an affine-linear factor with a y term")
    field = alg.field
    alpha, gamma = right.coeff(1, 0), right.coeff(0, 0)
    x = UniPoly.x(field)
    return RatFunc(x * (alpha / beta) + UniPoly.constant(field, gamma / beta))


# -- normality identities ------------------------------------------------------


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    counterexample: Optional[str] = None

    def to_record(self) -> dict:
        rec = {"name": self.name, "passed": self.passed}
        if self.counterexample is not None:
            rec["counterexample"] = self.counterexample
        return rec


@dataclass(frozen=True)
class NormalityReport:
    """Results of the three identities characterizing normality of t^2 - v."""

    checks: Tuple[CheckResult, ...]

    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failed_names(self) -> List[str]:
        return [c.name for c in self.checks if not c.passed]

    def to_record(self) -> dict:
        return {"checks": [c.to_record() for c in self.checks], "all_passed": self.all_passed()}


def normal_element_checks(field: Field, q, v, samples) -> NormalityReport:
    """Check the identities forced by t^2 - v being normal in the skew ring:

      1. t commutes with v;
      2. delta^2(r) = v*r - sigma^2(r)*v on every sample r;
      3. delta(sigma(r)) = -sigma(delta(r)) on every sample r.

    Any failure names the violated identity and the witness r.
    """
    ring = SkewRing(field, q, with_delta=True)
    v = ring.coerce(v)
    samples = [ring.coerce(r) for r in samples]
    checks = []

    tv = ring.t() * ring.poly([v])
    vt = ring.poly([v]) * ring.t()
    checks.append(CheckResult("t-commutes-with-v", tv == vt, None if tv == vt else str(v)))

    bad = None
    for r in samples:
        lhs = ring.delta(ring.delta(r))
        rhs = v * r - ring.sigma(ring.sigma(r)) * v
        if lhs != rhs:
            bad = str(r)
            break
    checks.append(CheckResult("delta-squared-matches-conjugation", bad is None, bad))

    bad = None
    for r in samples:
        if ring.delta(ring.sigma(r)) != -ring.sigma(ring.delta(r)):
            bad = str(r)
            break
    checks.append(CheckResult("minus-one-skew", bad is None, bad))
    return NormalityReport(tuple(checks))
