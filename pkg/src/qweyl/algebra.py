"""Normal-ordered arithmetic in the q-deformed Weyl algebra on x, y.

The algebra is generated by x and y subject to y*x = q*x*y + 1 for a fixed
nonzero scalar q.  Every element is kept in normal order (x powers to the
left of y powers) as a sparse map from exponent pairs to nonzero scalars.
Products are computed through the n-step reordering relations

    y * x^n = q^n * x^n * y + [n]_q * x^(n-1)
    y^n * x = q^n * x * y^n + [n]_q * y^(n-1)

where [n]_q = 1 + q + ... + q^(n-1).
"""

from __future__ import annotations

from typing import Dict, Iterable, Optional, Tuple

from . import _linalg
from .errors import ContextMismatch, QIsOne, QIsZero, ZeroDivisor, ZeroInput
from .field import Field, Scalar, q_int

Exponents = Tuple[int, int]


def _term_sort_key(ij: Exponents):
    # descending degree-lex with x major within a degree
    i, j = ij
    return (-(i + j), -i)


class WeylAlgebra:
    """Context for the algebra: a coefficient field plus the parameter q != 0."""

    def __init__(self, field: Field, q):
        self.field = field
        self.q = field.scalar(q)
        if self.q.is_zero():
            raise QIsZero("the deformation parameter q must be nonzero")
        self._reorder_memo: Dict[Exponents, Dict[Exponents, Scalar]] = {}

    def __eq__(self, other) -> bool:
        return isinstance(other, WeylAlgebra) and self.field == other.field and self.q == other.q

    def __hash__(self) -> int:
        return hash((self.field, self.q))

    def __repr__(self) -> str:
        return f"WeylAlgebra({self.field!r}, q={self.q})"

    # -- element constructors -------------------------------------------------

    def from_terms(self, terms: Dict[Exponents, object]) -> "WeylPoly":
        clean = {}
        for (i, j), c in terms.items():
            s = self.field.scalar(c)
            if not s.is_zero():
                clean[(int(i), int(j))] = s
        return WeylPoly(self, clean)

    def zero(self) -> "WeylPoly":
        return WeylPoly(self, {})

    def one(self) -> "WeylPoly":
        return self.from_terms({(0, 0): 1})

    def x(self) -> "WeylPoly":
        return self.from_terms({(1, 0): 1})

    def y(self) -> "WeylPoly":
        return self.from_terms({(0, 1): 1})

    def monomial(self, i: int, j: int, coeff=1) -> "WeylPoly":
        return self.from_terms({(i, j): coeff})

    def scalar_poly(self, c) -> "WeylPoly":
        return self.from_terms({(0, 0): c})

    def u(self) -> "WeylPoly":
        """The distinguished normal element (q-1)*x*y + 1; undefined at q = 1."""
        if self.q.is_one():
            raise QIsOne("u degenerates to 1 at q = 1")
        return self.from_terms({(1, 1): self.q - 1, (0, 0): 1})

    # -- reordering -----------------------------------------------------------

    def _y_pow_x_pow(self, j: int, k: int) -> Dict[Exponents, Scalar]:
        """Normal form of y^j * x^k as a term map (memoized, write-once)."""
        if j == 0:
            return {(k, 0): self.field.one()}
        if k == 0:
            return {(0, j): self.field.one()}
        key = (j, k)
        cached = self._reorder_memo.get(key)
        if cached is not None:
            return cached
        # y^j x^k = q^k * (y^(j-1) x^k) * y + [k]_q * (y^(j-1) x^(k-1))
        qk = self.q**k
        bracket = q_int(k, self.q)
        result: Dict[Exponents, Scalar] = {}
        for (i2, j2), c in self._y_pow_x_pow(j - 1, k).items():
            _accumulate(result, (i2, j2 + 1), qk * c)
        if not bracket.is_zero():
            for (i2, j2), c in self._y_pow_x_pow(j - 1, k - 1).items():
                _accumulate(result, (i2, j2), bracket * c)
        self._reorder_memo[key] = result
        return result

    def reorder_monomial(self, i: int, j: int, k: int, l: int) -> "WeylPoly":
        """Normal form of the product x^i y^j * x^k y^l."""
        terms: Dict[Exponents, Scalar] = {}
        for (a, b), c in self._y_pow_x_pow(j, k).items():
            terms[(a + i, b + l)] = c
        return WeylPoly(self, terms)


def _accumulate(terms: Dict[Exponents, Scalar], key: Exponents, value: Scalar):
    prev = terms.get(key)
    total = value if prev is None else prev + value
    if total.is_zero():
        terms.pop(key, None)
    else:
        terms[key] = total


class WeylPoly:
    """An immutable normal-ordered element of the algebra."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: WeylAlgebra, terms: Dict[Exponents, Scalar]):
        self.algebra = algebra
        self.terms = terms  # owned; never mutated after construction

    def _check(self, other: "WeylPoly"):
        if self.algebra != other.algebra:
            raise ContextMismatch("operands from different algebras")

    def _coerce(self, other):
        if isinstance(other, WeylPoly):
            self._check(other)
            return other
        if isinstance(other, (int, Scalar)):
            return self.algebra.scalar_poly(other)
        return None

    # -- queries ----------------------------------------------------------

    def support(self) -> Tuple[Exponents, ...]:
        """Exponent pairs in canonical (descending degree-lex) order."""
        return tuple(sorted(self.terms, key=_term_sort_key))

    def coeff(self, i: int, j: int) -> Scalar:
        return self.terms.get((i, j), self.algebra.field.zero())

    def is_zero(self) -> bool:
        return not self.terms

    def is_scalar(self) -> bool:
        return not self.terms or set(self.terms) == {(0, 0)}

    def is_unit(self) -> bool:
        return set(self.terms) == {(0, 0)}

    def total_degree(self) -> Optional[int]:
        """max(i + j) over the support; None for the zero polynomial."""
        if not self.terms:
            return None
        return max(i + j for i, j in self.terms)

    def leading_term(self) -> Tuple[Exponents, Scalar]:
        if not self.terms:
            raise ZeroInput("zero polynomial has no leading term")
        key = min(self.terms, key=_term_sort_key)
        return key, self.terms[key]

    def constant(self) -> Scalar:
        return self.coeff(0, 0)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for key, c in other.terms.items():
            _accumulate(out, key, c)
        return WeylPoly(self.algebra, out)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return WeylPoly(self.algebra, {k: -c for k, c in self.terms.items()})

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        alg = self.algebra
        out: Dict[Exponents, Scalar] = {}
        for (i, j), c1 in self.terms.items():
            for (k, l), c2 in other.terms.items():
                c = c1 * c2
                for (a, b), r in alg._y_pow_x_pow(j, k).items():
                    _accumulate(out, (a + i, b + l), c * r)
        return WeylPoly(alg, out)

    def __rmul__(self, other):
        # scalars are central, so this only needs the coercion path
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self

    def __pow__(self, n: int) -> "WeylPoly":
        if n < 0:
            raise ValueError("negative powers are not defined")
        result = self.algebra.one()
        for _ in range(n):
            result = result * self
        return result

    def substitute(self, lam, mu) -> "WeylPoly":
        """f(lam*x, mu*y): the coefficient of x^i y^j is scaled by lam^i mu^j."""
        lam = self.algebra.field.scalar(lam)
        mu = self.algebra.field.scalar(mu)
        return self.algebra.from_terms(
            {(i, j): c * lam**i * mu**j for (i, j), c in self.terms.items()}
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeylPoly):
            return NotImplemented
        return self.algebra == other.algebra and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.algebra, frozenset(self.terms.items())))

    # -- rendering ----------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for i, j in self.support():
            c = self.terms[(i, j)]
            mag, neg = _coeff_magnitude(c)
            body = _render_term(mag, i, j)
            if not parts:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"WeylPoly({self})"


def _coeff_magnitude(c: Scalar):
    if c.field.p is None and c.value < 0:
        return -c, True
    return c, False


def _render_term(mag: Scalar, i: int, j: int) -> str:
    vars_part = []
    if i:
        vars_part.append("x" if i == 1 else f"x^{i}")
    if j:
        vars_part.append("y" if j == 1 else f"y^{j}")
    if not vars_part:
        return str(mag)
    if mag.is_one():
        return "*".join(vars_part)
    return "*".join([str(mag)] + vars_part)


# -- structural predicates ----------------------------------------------------


class DivisionWitness:
    """Evidence that a divides c: c = a*cofactor (right) or cofactor*a (left)."""

    __slots__ = ("side", "cofactor")

    def __init__(self, side: str, cofactor: WeylPoly):
        self.side = side
        self.cofactor = cofactor

    def __repr__(self) -> str:
        return f"DivisionWitness({self.side}, {self.cofactor})"


def _monomials_up_to(degree: int) -> Tuple[Exponents, ...]:
    out = [(i, j) for total in range(degree + 1) for i in range(total, -1, -1) for j in [total - i]]
    return tuple(out)


def _solve_product_equation(
    alg: WeylAlgebra, columns, target: WeylPoly
) -> Optional[WeylPoly]:
    """Solve sum_k v_k * columns[k] = target for scalars v_k.

    columns maps unknown monomials to the polynomial each contributes;
    the equation is linear because multiplication is bilinear.
    """
    keys = set(target.terms)
    for _, poly in columns:
        keys.update(poly.terms)
    keys = sorted(keys, key=_term_sort_key)
    rows = [[poly.coeff(*key) for _, poly in columns] for key in keys]
    rhs = [target.coeff(*key) for key in keys]
    sol = _linalg.solve(alg.field, rows, rhs)
    if sol is None:
        return None
    return alg.from_terms({mono: v for (mono, _), v in zip(columns, sol)})


def divides(a: WeylPoly, c: WeylPoly) -> Optional[DivisionWitness]:
    """Two-sided divisibility: a witness with c = a*b or c = b*a, else None.

    The cofactor is found by solving the linear system for b of total
    degree deg(c) - deg(a); the right orientation is tried first.
    """
    a._check(c)
    if a.is_zero():
        raise ZeroDivisor("division by the zero polynomial")
    alg = a.algebra
    if c.is_zero():
        return DivisionWitness("right", alg.zero())
    d = c.total_degree() - a.total_degree()
    if d < 0:
        return None
    monos = _monomials_up_to(d)
    right_cols = [(m, a * alg.monomial(*m)) for m in monos]
    b = _solve_product_equation(alg, right_cols, c)
    if b is not None and a * b == c:
        return DivisionWitness("right", b)
    left_cols = [(m, alg.monomial(*m) * a) for m in monos]
    b = _solve_product_equation(alg, left_cols, c)
    if b is not None and b * a == c:
        return DivisionWitness("left", b)
    return None


def is_normal(f: WeylPoly) -> Optional[Tuple[WeylPoly, WeylPoly]]:
    """Witnesses (gx, gy) with f*x = gx*f and f*y = gy*f, or None.

    Existence on the generators certifies normality because x and y
    generate the algebra.  Both witnesses are found as degree-1 solutions
    of linear systems.
    """
    if f.is_zero():
        raise ZeroInput("normality is for nonzero polynomials")
    alg = f.algebra
    monos = _monomials_up_to(1)
    witnesses = []
    for gen in (alg.x(), alg.y()):
        target = f * gen
        cols = [(m, alg.monomial(*m) * f) for m in monos]
        g = _solve_product_equation(alg, cols, target)
        if g is None or g * f != target:
            return None
        witnesses.append(g)
    return witnesses[0], witnesses[1]


def is_central(f: WeylPoly) -> bool:
    """Whether f commutes with both generators."""
    alg = f.algebra
    x, y = alg.x(), alg.y()
    return f * x == x * f and f * y == y * f


def central_by_support(f: WeylPoly, n: int) -> bool:
    """Support test for centrality when q has finite order n > 1: every
    exponent of x and of y must be a multiple of n."""
    return all(i % n == 0 and j % n == 0 for i, j in f.terms)


def u_power_coeffs(m: int, alg: WeylAlgebra) -> list:
    """Coefficients (c_0, ..., c_m) of x^i y^i in u^m, u = (q-1)xy + 1.

    The coefficients satisfy the ratio recursion
    c_(j+1) = (q^m - q^j) / [j+1]_q * c_j, whose division-free form is
    c_j = q^(j(j-1)/2) * (q-1)^j * binom_q(m, j) with the Gaussian binomial
    computed by the q-Pascal rule.  The division-free form stays defined
    when [j+1]_q vanishes at roots of unity.
    """
    if alg.q.is_one():
        raise QIsOne("u is undefined at q = 1")
    if m < 0:
        raise ValueError("m must be a natural number")
    q = alg.q
    one = alg.field.one()
    # Gaussian binomials binom_q(m, j) for the fixed m, by the q-Pascal rule
    row = [one]
    for _ in range(m):
        prev = row
        row = [one]
        for j in range(1, len(prev)):
            row.append(prev[j - 1] + q**j * prev[j])
        row.append(one)
    out = []
    for j in range(m + 1):
        out.append(q ** (j * (j - 1) // 2) * (q - 1) ** j * row[j])
    return out
