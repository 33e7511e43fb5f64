"""Exact coefficient fields: the rationals and prime fields F_p for odd primes p.

Scalars are immutable values tied to their field; arithmetic between scalars
of different fields raises FieldMismatch.  Square-root detection and
multiplicative-order computation are exact, with no floating point anywhere.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Optional, Union

from .errors import CharacteristicTwo, FieldMismatch, InvalidModulus, ParseError, ZeroInput

# Below this modulus, square roots are found by exhaustive search; above it,
# Tonelli-Shanks.  Both branches must agree with Euler's criterion.
_EXHAUSTIVE_SQRT_LIMIT = 10_000

_RATIONAL_RE = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")
_RESIDUE_RE = re.compile(r"^([+-]?\d+)$")


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for d in range(2, math.isqrt(n) + 1):
        if n % d == 0:
            return False
    return True


class Field:
    """The rational field (p is None) or F_p for an odd prime p."""

    __slots__ = ("p",)

    def __init__(self, p: Optional[int] = None):
        if p is not None:
            if p == 2:
                raise CharacteristicTwo("characteristic 2 is not supported")
            if not _is_prime(p):
                raise InvalidModulus(f"{p} is not prime")
        self.p = p

    @property
    def is_rationals(self) -> bool:
        return self.p is None

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Field) and self.p == other.p

    def __hash__(self) -> int:
        return hash(("Field", self.p))

    def __repr__(self) -> str:
        return "Field(rationals)" if self.p is None else f"Field({self.p})"

    def spec_string(self) -> str:
        """The CLI syntax for this field: "q" or "fp:<p>"."""
        return "q" if self.p is None else f"fp:{self.p}"

    def __call__(self, value) -> "Scalar":
        return self.scalar(value)

    def scalar(self, value: Union["Scalar", int, Fraction, str]) -> "Scalar":
        """Coerce an int, Fraction, literal string or Scalar into this field."""
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldMismatch(f"scalar from {value.field!r} used in {self!r}")
            return value
        if isinstance(value, str):
            return self.from_str(value)
        if self.p is None:
            return Scalar(self, Fraction(value))
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ZeroDivisionError(f"denominator divisible by {self.p}")
            num = value.numerator % self.p
            den = value.denominator % self.p
            return Scalar(self, num * pow(den, -1, self.p) % self.p)
        return Scalar(self, value % self.p)

    def from_str(self, text: str) -> "Scalar":
        """Parse a scalar literal: "n" or "n/d" over the rationals, an integer over F_p."""
        text = text.strip()
        if self.p is None:
            m = _RATIONAL_RE.match(text)
            if not m:
                raise ParseError(f"bad rational literal {text!r}", 0)
            num = int(m.group(1))
            den = int(m.group(2)) if m.group(2) else 1
            if den == 0:
                raise ZeroDivisionError("zero denominator in literal")
            return Scalar(self, Fraction(num, den))
        m = _RESIDUE_RE.match(text)
        if not m:
            raise ParseError(f"bad residue literal {text!r} for F_{self.p}", 0)
        return Scalar(self, int(m.group(1)) % self.p)

    def zero(self) -> "Scalar":
        return self.scalar(0)

    def one(self) -> "Scalar":
        return self.scalar(1)

    def elements(self):
        """All field elements, ascending; only available for prime fields."""
        if self.p is None:
            raise ValueError("the rationals are not enumerable")
        return (self.scalar(r) for r in range(self.p))


class Scalar:
    """An exact field element: a Fraction over the rationals, a residue over F_p."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value):
        self.field = field
        self.value = value  # Fraction (canonical) or int in [0, p)

    def _coerce(self, other) -> "Scalar":
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatch(f"{other.field!r} vs {self.field!r}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.scalar(other)
        return NotImplemented

    def is_zero(self) -> bool:
        return self.value == 0

    def is_one(self) -> bool:
        return self.value == 1

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.field.p is None:
            return Scalar(self.field, self.value + other.value)
        return Scalar(self.field, (self.value + other.value) % self.field.p)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        if self.field.p is None:
            return Scalar(self.field, -self.value)
        return Scalar(self.field, (-self.value) % self.field.p)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.field.p is None:
            return Scalar(self.field, self.value * other.value)
        return Scalar(self.field, (self.value * other.value) % self.field.p)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self.field.p is None:
            return Scalar(self.field, 1 / self.value)
        return Scalar(self.field, pow(self.value, -1, self.field.p))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int) -> "Scalar":
        if n < 0:
            return self.inverse() ** (-n)
        if self.field.p is None:
            return Scalar(self.field, self.value**n)
        return Scalar(self.field, pow(self.value, n, self.field.p))

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            try:
                other = self.field.scalar(other)
            except ZeroDivisionError:
                return False
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.field == other.field and self.value == other.value

    def __hash__(self) -> int:
        return hash((self.field.p, self.value))

    def __str__(self) -> str:
        return str(self.value)

    def __repr__(self) -> str:
        return f"Scalar({self.value}, {self.field!r})"


def square_root(x: Scalar) -> Optional[Scalar]:
    """A canonical s with s*s = x, or None when x is not a square.

    Over the rationals the nonnegative root is returned; over F_p the
    smaller of the two residues.
    """
    f = x.field
    if f.p is None:
        v = x.value
        if v < 0:
            return None
        rn = math.isqrt(v.numerator)
        rd = math.isqrt(v.denominator)
        if rn * rn != v.numerator or rd * rd != v.denominator:
            return None
        return Scalar(f, Fraction(rn, rd))
    p, a = f.p, x.value
    if a == 0:
        return f.zero()
    euler = pow(a, (p - 1) // 2, p)
    if euler != 1:
        return None
    if p < _EXHAUSTIVE_SQRT_LIMIT:
        for r in range(p // 2 + 1):
            if r * r % p == a:
                return Scalar(f, r)
        raise AssertionError(f"Euler criterion says {a} is a square mod {p}")
    r = _tonelli_shanks(a, p)
    return Scalar(f, min(r, p - r))


def _tonelli_shanks(a: int, p: int) -> int:
    """A square root of a mod p; the caller guarantees a is a nonzero square."""
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    # write p - 1 = odd * 2^s
    odd, s = p - 1, 0
    while odd % 2 == 0:
        odd //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    c = pow(z, odd, p)
    r = pow(a, (odd + 1) // 2, p)
    t = pow(a, odd, p)
    m = s
    while t != 1:
        t2i, i = t, 0
        for i in range(1, m):
            t2i = t2i * t2i % p
            if t2i == 1:
                break
        b = pow(c, 1 << (m - i - 1), p)
        r = r * b % p
        c = b * b % p
        t = t * c % p
        m = i
    return r


def multiplicative_order(q: Scalar) -> Optional[int]:
    """The least n >= 1 with q^n = 1, or None when no power of q is 1.

    Infinite order only happens over the rationals, where the answer is 1
    for q = 1, 2 for q = -1 and None otherwise.
    """
    if q.is_zero():
        raise ZeroInput("multiplicative order of zero")
    f = q.field
    if f.p is None:
        if q.value == 1:
            return 1
        if q.value == -1:
            return 2
        return None
    # the order divides p - 1; test divisors in increasing order
    for d in _sorted_divisors(f.p - 1):
        if pow(q.value, d, f.p) == 1:
            return d
    raise AssertionError("order must divide p - 1")


def _sorted_divisors(n: int) -> list:
    small, large = [], []
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def q_int(n: int, q: Scalar) -> Scalar:
    """The q-integer 1 + q + ... + q^(n-1), with value 0 for n = 0 and 1 for n = 1."""
    if n < 0:
        raise ValueError("q-integers are defined for n >= 0")
    total = q.field.zero()
    power = q.field.one()
    for _ in range(n):
        total = total + power
        power = power * q
    return total
