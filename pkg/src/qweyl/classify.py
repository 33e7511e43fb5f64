"""Reducibility and primality classifiers for quadratic forms and beyond.

A quadratic form a*x^2 + b*xy + c*y^2 + d*x + e*y + k factors into two
affine-linear polynomials exactly when one of a short list of scalar
conditions holds; each firing condition comes with an explicit
factorization, so every "reducible" verdict is certified by multiplying
the factors back.  The primality classifier is a decision tree that only
answers "prime"/"not prime" when a proven criterion applies and returns
"undecided" otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from .algebra import WeylAlgebra, WeylPoly, is_central
from .errors import DegreeTooLow, QIsOne, WrongShape
from .field import Scalar, multiplicative_order, q_int, square_root
from .unipoly import UniPoly, find_factor, rational_factor


@dataclass(frozen=True)
class QuadraticForm:
    """The six coefficients of a*x^2 + b*xy + c*y^2 + d*x + e*y + k."""

    algebra: WeylAlgebra
    a: Scalar
    b: Scalar
    c: Scalar
    d: Scalar
    e: Scalar
    k: Scalar

    @classmethod
    def make(cls, algebra: WeylAlgebra, a=0, b=0, c=0, d=0, e=0, k=0) -> "QuadraticForm":
        s = algebra.field.scalar
        return cls(algebra, s(a), s(b), s(c), s(d), s(e), s(k))

    @classmethod
    def from_poly(cls, f: WeylPoly) -> "QuadraticForm":
        allowed = {(2, 0), (1, 1), (0, 2), (1, 0), (0, 1), (0, 0)}
        if not set(f.terms) <= allowed:
            raise WrongShape("polynomial has terms beyond total degree 2")
        return cls(
            f.algebra,
            f.coeff(2, 0),
            f.coeff(1, 1),
            f.coeff(0, 2),
            f.coeff(1, 0),
            f.coeff(0, 1),
            f.coeff(0, 0),
        )

    def poly(self) -> WeylPoly:
        return self.algebra.from_terms(
            {
                (2, 0): self.a,
                (1, 1): self.b,
                (0, 2): self.c,
                (1, 0): self.d,
                (0, 1): self.e,
                (0, 0): self.k,
            }
        )

    def is_degenerate(self) -> bool:
        return self.a.is_zero() and self.b.is_zero() and self.c.is_zero()


@dataclass(frozen=True)
class ReducibilityVerdict:
    """Outcome of a reducibility test; factors are present iff reducible."""

    reducible: bool
    case: Optional[str] = None
    left: Optional[WeylPoly] = None
    right: Optional[WeylPoly] = None

    def to_record(self) -> dict:
        rec = {"verdict": "reducible" if self.reducible else "irreducible"}
        if self.reducible:
            rec["case"] = self.case
            rec["factors"] = [str(self.left), str(self.right)]
        return rec


@dataclass(frozen=True)
class PrimalityVerdict:
    """Prime / not-prime / undecided, with the certifying evidence.

    A "prime" verdict names the criterion that applies.  A "not prime"
    verdict carries either a factorization f = left*right into nonunits or
    a pair (b, c) with f | b*c while f divides neither b nor c.
    """

    status: str  # "prime" | "not_prime" | "undecided"
    criterion: Optional[str] = None
    reason: Optional[str] = None
    factors: Optional[Tuple[WeylPoly, WeylPoly]] = None
    pair: Optional[Tuple[WeylPoly, WeylPoly]] = None

    def to_record(self) -> dict:
        rec = {"verdict": self.status}
        if self.criterion is not None:
            rec["criterion"] = self.criterion
        if self.reason is not None:
            rec["reason"] = self.reason
        if self.factors is not None:
            rec["factors"] = [str(self.factors[0]), str(self.factors[1])]
        if self.pair is not None:
            rec["pair"] = [str(self.pair[0]), str(self.pair[1])]
        return rec


def quantum_discriminant(form: QuadraticForm) -> Scalar:
    """b^2 - 4acq; a square whenever the form is reducible."""
    return form.b * form.b - 4 * form.a * form.c * form.algebra.q


# -- quadratic forms without linear part ---------------------------------------


def quadratic_form_cases(
    algebra: WeylAlgebra, a, b, c, k
) -> List[Tuple[str, WeylPoly, WeylPoly]]:
    """Every firing reducibility case for a*x^2 + b*xy + c*y^2 + k.

    Case labels follow the classification taxonomy used throughout this
    package:

      1a  a = k = 0                      (bx + cy) * y
      1b  c = k = 0                      x * (ax + by)
      1c  a = b = 0, -ck a square s^2    (cy - s) * (y + s/c)
      1d  b = c = 0, -ak a square s^2    (ax - s) * (x + s/a)
      2   k != 0 and b^2 - 4acq = (b - 2qk)^2          (ax + ky) * (x + (c/k)y)
      3   q != -1, b != 0, discriminant ((1-q)b/[2]_q)^2 and
          a(b/[2]_q - k) a square s^2    (ax + (b/[2]_q)y + s) * (x + ([2]_q c/b)y - s/a)
      4   q = -1, b = 0, ac = t^2 != 0 and (t - k)c = w^2 for some sign of t
                                          (ax + ty - aw/t) * (x + (c/t)y + w/t)

    The list is empty exactly when the form is irreducible.
    """
    F = algebra.field
    a, b, c, k = F.scalar(a), F.scalar(b), F.scalar(c), F.scalar(k)
    if a.is_zero() and b.is_zero() and c.is_zero():
        raise DegreeTooLow("need a nonzero coefficient on x^2, xy or y^2")
    q = algebra.q
    target = algebra.from_terms({(2, 0): a, (1, 1): b, (0, 2): c, (0, 0): k})
    disc = b * b - 4 * a * c * q
    out: List[Tuple[str, WeylPoly, WeylPoly]] = []

    def emit(label: str, left_terms: dict, right_terms: dict):
        left = algebra.from_terms(left_terms)
        right = algebra.from_terms(right_terms)
        assert left * right == target, f"case {label} factorization failed to verify"
        out.append((label, left, right))

    if a.is_zero() and k.is_zero():
        emit("1a", {(1, 0): b, (0, 1): c}, {(0, 1): 1})
    if c.is_zero() and k.is_zero():
        emit("1b", {(1, 0): 1}, {(1, 0): a, (0, 1): b})
    if a.is_zero() and b.is_zero():
        s = square_root(-c * k)
        if s is not None:
            emit("1c", {(0, 1): c, (0, 0): -s}, {(0, 1): 1, (0, 0): s / c})
    if b.is_zero() and c.is_zero():
        s = square_root(-a * k)
        if s is not None:
            emit("1d", {(1, 0): a, (0, 0): -s}, {(1, 0): 1, (0, 0): s / a})
    if not k.is_zero() and disc == (b - 2 * q * k) ** 2:
        emit("2", {(1, 0): a, (0, 1): k}, {(1, 0): 1, (0, 1): c / k})
    if q != -1 and not b.is_zero():
        two_q = q_int(2, q)
        if disc == ((1 - q) * b / two_q) ** 2:
            s = square_root(a * (b / two_q - k))
            if s is not None:
                # the case conditions force a != 0 here
                assert not a.is_zero()
                emit(
                    "3",
                    {(1, 0): a, (0, 1): b / two_q, (0, 0): s},
                    {(1, 0): 1, (0, 1): two_q * c / b, (0, 0): -s / a},
                )
    if q == -1 and b.is_zero():
        r = square_root(a * c)
        if r is not None and not r.is_zero():
            for tau in (r, -r):
                w = square_root((tau - k) * c)
                if w is not None:
                    emit(
                        "4",
                        {(1, 0): a, (0, 1): tau, (0, 0): -a * w / tau},
                        {(1, 0): 1, (0, 1): c / tau, (0, 0): w / tau},
                    )
                    break
    return out


def classify_quadratic_no_linear(algebra: WeylAlgebra, a, b, c, k) -> ReducibilityVerdict:
    """Reducibility of a*x^2 + b*xy + c*y^2 + k, with an explicit factorization.

    The case analysis is complete: "irreducible" means no factorization
    into two affine-linear polynomials exists.  When several cases fire,
    the lowest-numbered one is reported.
    """
    cases = quadratic_form_cases(algebra, a, b, c, k)
    if not cases:
        return ReducibilityVerdict(False)
    label, left, right = cases[0]
    return ReducibilityVerdict(True, label, left, right)


# -- general quadratic forms ----------------------------------------------------


def classify_quadratic_general(form: QuadraticForm) -> ReducibilityVerdict:
    """Reducibility of a full quadratic form, linear terms included.

    Writes f = (L)(R) with L, R affine-linear and equates the six
    coefficients.  The scale freedom is fixed by normalizing the leading
    nonzero coefficient of L to 1, which leaves two branches: L = x + mu*y
    + nu (then mu solves qa*mu^2 - b*mu + c = 0) and L = y + nu (then a
    must vanish).  The remaining unknowns solve a 2x2 linear system whose
    singular case degenerates to a quadratic in one parameter, so the
    whole search is finite.  A non-square discriminant b^2 - 4acq rejects
    immediately.
    """
    if form.is_degenerate():
        raise DegreeTooLow("need a nonzero coefficient on x^2, xy or y^2")
    if square_root(quantum_discriminant(form)) is None:
        return ReducibilityVerdict(False)
    target = form.poly()
    for left, right in _general_candidates(form):
        if left.total_degree() == 1 and right.total_degree() == 1 and left * right == target:
            return ReducibilityVerdict(True, "general", left, right)
    return ReducibilityVerdict(False)


def _general_candidates(form: QuadraticForm):
    alg = form.algebra
    F = alg.field
    q = alg.q
    a, b, c, d, e, k = form.a, form.b, form.c, form.d, form.e, form.k
    two = F.scalar(2)

    # branch: left factor x + mu*y + nu, right factor a*x + beta*y + gamma
    mus: List[Scalar] = []
    if not a.is_zero():
        r = square_root(b * b - 4 * q * a * c)
        if r is not None:
            inv = (two * q * a).inverse()
            mus = [(b + r) * inv]
            if not r.is_zero():
                mus.append((b - r) * inv)
    elif not b.is_zero():
        mus = [c / b]
    for mu in mus:
        beta = b - q * mu * a
        det = beta - mu * a
        if not det.is_zero():
            gamma = (d * beta - a * e) / det
            nu = (e - mu * d) / det
            if nu * gamma + mu * a == k:
                yield (
                    alg.from_terms({(1, 0): 1, (0, 1): mu, (0, 0): nu}),
                    alg.from_terms({(1, 0): a, (0, 1): beta, (0, 0): gamma}),
                )
        elif mu * d == e:
            # the 2x2 system is a line gamma = d - nu*a; close with the
            # constant-term equation, a quadratic in nu (a != 0 here)
            r2 = square_root(d * d - 4 * a * (k - mu * a))
            if r2 is not None:
                inv = (two * a).inverse()
                for nu in ((d + r2) * inv, (d - r2) * inv):
                    gamma = d - nu * a
                    yield (
                        alg.from_terms({(1, 0): 1, (0, 1): mu, (0, 0): nu}),
                        alg.from_terms({(1, 0): a, (0, 1): beta, (0, 0): gamma}),
                    )

    # branch: left factor y + nu (possible only when a = 0)
    if a.is_zero():
        alpha = b / q
        if not b.is_zero():
            nu = q * d / b
            gamma = e - nu * c
            if nu * gamma + alpha == k:
                yield (
                    alg.from_terms({(0, 1): 1, (0, 0): nu}),
                    alg.from_terms({(1, 0): alpha, (0, 1): c, (0, 0): gamma}),
                )
        elif d.is_zero() and not c.is_zero():
            r3 = square_root(e * e - 4 * c * k)
            if r3 is not None:
                inv = (two * c).inverse()
                for nu in ((e + r3) * inv, (e - r3) * inv):
                    gamma = e - nu * c
                    yield (
                        alg.from_terms({(0, 1): 1, (0, 0): nu}),
                        alg.from_terms({(0, 1): c, (0, 0): gamma}),
                    )


# -- primality -------------------------------------------------------------------


def is_scalar_multiple_of_u(f: WeylPoly) -> Optional[Scalar]:
    """The scalar k with f = k*u, if one exists (zero for the zero polynomial)."""
    alg = f.algebra
    if alg.q.is_one():
        raise QIsOne("u is undefined at q = 1")
    if f.is_zero():
        return alg.field.zero()
    k = f.constant()
    if f == k * alg.u():
        return k
    return None


def scaling_violation(f: WeylPoly) -> Optional[Tuple[int, int]]:
    """First support pair (i, j) violating f = q^(j-i) * f(qx, y/q), or None.

    Every prime polynomial satisfies the identity for all of its support
    pairs, so a violation rules primality out; the converse fails.
    """
    alg = f.algebra
    sub = f.substitute(alg.q, alg.q.inverse())
    for i, j in f.support():
        if alg.q ** (j - i) * sub != f:
            return (i, j)
    return None


def _as_univariate(f: WeylPoly) -> Optional[Tuple[str, UniPoly]]:
    field = f.algebra.field
    if all(j == 0 for _, j in f.terms):
        deg = f.total_degree() or 0
        return "x", UniPoly(field, [f.coeff(i, 0) for i in range(deg + 1)])
    if all(i == 0 for i, _ in f.terms):
        deg = f.total_degree() or 0
        return "y", UniPoly(field, [f.coeff(0, j) for j in range(deg + 1)])
    return None


def _univariate_to_weyl(alg: WeylAlgebra, var: str, p: UniPoly) -> WeylPoly:
    if var == "x":
        return alg.from_terms({(i, 0): c for i, c in enumerate(p.coeffs)})
    return alg.from_terms({(0, j): c for j, c in enumerate(p.coeffs)})


def _commutative_factor(f: WeylPoly) -> Optional[Tuple[WeylPoly, WeylPoly]]:
    """A proper factorization of a one-variable polynomial, or None if it
    is irreducible in the commutative polynomial ring."""
    var, p = _as_univariate(f)
    split = rational_factor(p) if f.algebra.field.p is None else find_factor(p)
    if split is None:
        return None
    g, h = split
    alg = f.algebra
    pair = _univariate_to_weyl(alg, var, g), _univariate_to_weyl(alg, var, h)
    assert pair[0] * pair[1] == f
    return pair


def _variables_witness(alg: WeylAlgebra, var: str) -> Tuple[WeylPoly, WeylPoly]:
    """The pair certifying that x (or y) is not prime when q != -1:
    y^2*x = (q^2*xy + [2]_q)*y and y*x^2 = x*(q^2*xy + [2]_q)."""
    q = alg.q
    core = alg.from_terms({(1, 1): q * q, (0, 0): q_int(2, q)})
    if var == "x":
        return core, alg.y()
    return alg.x(), core


def _xy_shape_witness(f: WeylPoly) -> Tuple[WeylPoly, WeylPoly]:
    """For f = b*xy + k not a multiple of u: f*x = x*g with g = qb*xy + (b+k),
    and f divides neither x nor g."""
    alg = f.algebra
    b, k = f.coeff(1, 1), f.constant()
    g = alg.from_terms({(1, 1): alg.q * b, (0, 0): b + k})
    return alg.x(), g


def classify_prime(f: WeylPoly, witness_search: bool = True) -> PrimalityVerdict:
    """Decide primality of f where a proven criterion applies.

    The decision tree (first match wins):

      1. zero and nonzero scalars are not prime, by convention;
      2. f = b*xy + k is prime iff it is a nonzero scalar multiple of u;
      3. when q has infinite order, f is prime iff it is a nonzero scalar
         multiple of u;
      4. at q = -1, f = a*x^2 + c*y^2 + k is prime iff it is irreducible;
      5. scalar multiples of x or y are not prime when q != -1;
      6. a one-variable f that factors in the commutative polynomial ring
         is not prime; if instead it is irreducible and central, it is
         prime; otherwise undecided;
      7. a quadratic with a verified affine-linear factorization is not
         prime (primes are irreducible);
      8. if the q-scaling identity fails on the support, f is not prime,
         but the verdict is only emitted together with an explicit
         counterexample pair found by the bounded brute-force search
         (available over small prime fields); otherwise undecided;
      9. everything else is undecided.
    """
    alg = f.algebra
    if alg.q.is_one():
        raise QIsOne("primality classification requires q != 1")
    q = alg.q
    deg = f.total_degree()
    if deg is None or deg == 0:
        return PrimalityVerdict("not_prime", reason="zero or unit (excluded by convention)")

    # f = b*xy + k
    if set(f.terms) <= {(1, 1), (0, 0)} and (1, 1) in f.terms:
        k = is_scalar_multiple_of_u(f)
        if k is not None and not k.is_zero():
            return PrimalityVerdict("prime", criterion="scalar-multiple-of-u")
        return PrimalityVerdict(
            "not_prime", reason="xy-shape but not a multiple of u", pair=_xy_shape_witness(f)
        )

    order = multiplicative_order(q)
    if order is None:
        k = is_scalar_multiple_of_u(f)
        if k is not None and not k.is_zero():
            return PrimalityVerdict("prime", criterion="scalar-multiple-of-u")
        return _not_prime_infinite_order(f)

    # q = -1, f = a*x^2 + c*y^2 + k: prime iff irreducible
    if q == -1 and set(f.terms) <= {(2, 0), (0, 2), (0, 0)}:
        verdict = classify_quadratic_no_linear(
            alg, f.coeff(2, 0), 0, f.coeff(0, 2), f.constant()
        )
        if verdict.reducible:
            return PrimalityVerdict(
                "not_prime",
                reason="reducible quadratic form",
                factors=(verdict.left, verdict.right),
            )
        return PrimalityVerdict("prime", criterion="irreducible-quadratic-at-q-minus-one")

    # scalar multiples of the generators
    if q != -1 and (set(f.terms) == {(1, 0)} or set(f.terms) == {(0, 1)}):
        var = "x" if (1, 0) in f.terms else "y"
        return PrimalityVerdict(
            "not_prime",
            reason=f"{var} divides a product of two polynomials it divides neither of",
            pair=_variables_witness(alg, var),
        )

    if _as_univariate(f) is not None:
        split = _commutative_factor(f)
        if split is not None:
            return PrimalityVerdict(
                "not_prime", reason="factors in the commutative polynomial ring", factors=split
            )
        if is_central(f):
            return PrimalityVerdict("prime", criterion="central-irreducible-univariate")
        return PrimalityVerdict(
            "undecided",
            reason="irreducible one-variable polynomial that is not central; no criterion applies",
        )

    if deg == 2:
        verdict = classify_quadratic_general(QuadraticForm.from_poly(f))
        if verdict.reducible:
            return PrimalityVerdict(
                "not_prime",
                reason="reducible quadratic form",
                factors=(verdict.left, verdict.right),
            )

    violation = scaling_violation(f)
    if violation is not None:
        reason = f"q-scaling identity fails on support pair {violation}"
        if witness_search and alg.field.p is not None and alg.field.p <= 7:
            from .oracle import EnumSpace, prime_counterexample_search

            space = EnumSpace(alg.field, q, max_total_degree=2)
            pair = prime_counterexample_search(f, space)
            if pair is not None:
                return PrimalityVerdict("not_prime", reason=reason, pair=pair)
            return PrimalityVerdict(
                "undecided", reason=reason + "; no counterexample within the search bound"
            )
        return PrimalityVerdict("undecided", reason=reason + "; no witness search available")

    return PrimalityVerdict("undecided", reason="no applicable criterion")


def _not_prime_infinite_order(f: WeylPoly) -> PrimalityVerdict:
    """At infinite order the only primes are the nonzero multiples of u, so
    anything else is not prime; attach the best available witness."""
    alg = f.algebra
    reason = "not a scalar multiple of u (q of infinite order)"
    support = set(f.terms)
    if support == {(1, 0)} or support == {(0, 1)}:
        var = "x" if (1, 0) in support else "y"
        return PrimalityVerdict("not_prime", reason=reason, pair=_variables_witness(alg, var))
    if f.total_degree() == 2:
        verdict = classify_quadratic_general(QuadraticForm.from_poly(f))
        if verdict.reducible:
            return PrimalityVerdict(
                "not_prime", reason=reason, factors=(verdict.left, verdict.right)
            )
    violation = scaling_violation(f)
    if violation is not None:
        reason += f"; q-scaling identity fails on support pair {violation}"
    return PrimalityVerdict("not_prime", reason=reason)
