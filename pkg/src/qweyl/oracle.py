"""Brute-force ground truth over small prime fields.

Everything here is exhaustive enumeration with deterministic order, used
to validate the closed-form classifiers.  A bounded search that returns
nothing means "no counterexample up to the bound", never a proof.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Iterator, List, Optional, Tuple

from . import _linalg
from .algebra import DivisionWitness, WeylAlgebra, WeylPoly, divides
from .errors import SpaceTooLarge, UnitInput, ZeroDivisor
from .field import Field

DEFAULT_CAP = 10**8


def _monomials_up_to(degree: int) -> Tuple[Tuple[int, int], ...]:
    """Exponent pairs of total degree <= degree, ascending degree-lex."""
    return tuple(
        (i, total - i) for total in range(degree + 1) for i in range(total + 1)
    )


@dataclass(frozen=True)
class EnumSpace:
    """A finite family of polynomials over a small prime field.

    The space consists of every nonzero polynomial whose support lies in
    `support` (by default all monomials of total degree <= max_total_degree)
    with arbitrary coefficients in F_p.
    """

    field: Field
    q: object
    max_total_degree: int = 2
    support: Optional[Tuple[Tuple[int, int], ...]] = None
    cap: int = DEFAULT_CAP

    def __post_init__(self):
        if self.field.p is None:
            raise ValueError("enumeration requires a prime field")
        if self.field.p > 7:
            raise ValueError("enumeration spaces are limited to p <= 7")
        if self.max_total_degree > 3:
            raise ValueError("enumeration spaces are limited to total degree <= 3")
        object.__setattr__(self, "q", self.field.scalar(self.q))
        if self.q.is_zero():
            raise ValueError("q must be nonzero")
        if self.support is None:
            object.__setattr__(self, "support", _monomials_up_to(self.max_total_degree))
        else:
            object.__setattr__(self, "support", tuple(self.support))

    def algebra(self) -> WeylAlgebra:
        return WeylAlgebra(self.field, self.q)

    def cardinality(self) -> int:
        """Number of polynomials in the space (zero excluded)."""
        return self.field.p ** len(self.support) - 1


def enumerate_polys(space: EnumSpace) -> Iterator[WeylPoly]:
    """Every nonzero polynomial of the space exactly once.

    Order: coefficient vectors over the support (sorted ascending
    degree-lex) counted as base-p integers, lowest monomial fastest; so
    the constants come first, then polynomials involving x, and so on.
    """
    if space.cardinality() > space.cap:
        raise SpaceTooLarge(f"{space.cardinality()} polynomials exceed the cap {space.cap}")
    alg = space.algebra()
    p = space.field.p
    support = space.support
    for n in range(1, p ** len(support)):
        terms = {}
        m = n
        for mono in support:
            digit = m % p
            if digit:
                terms[mono] = digit
            m //= p
        yield alg.from_terms(terms)


def _exact_degree_polys(space: EnumSpace, degree: int) -> Iterator[WeylPoly]:
    for f in enumerate_polys(space):
        if f.total_degree() == degree:
            yield f


def brute_factor(f: WeylPoly, space: EnumSpace) -> Optional[Tuple[WeylPoly, WeylPoly]]:
    """First (g, h) with g*h = f and both nonunits, by exhaustive pairs.

    Factors are searched in complementary total degrees (degrees add over
    products).  None means f admits no such factorization with factor
    degrees up to the space bound; for deg f = 2 and bound >= 1 this is a
    complete irreducibility test.
    """
    deg = f.total_degree()
    if deg is None or deg == 0:
        raise UnitInput("factor search needs a nonzero nonunit")
    count = space.cardinality()
    if count * count > space.cap:
        raise SpaceTooLarge(f"{count * count} candidate pairs exceed the cap {space.cap}")
    for dg in range(1, deg):
        dh = deg - dg
        if dg > space.max_total_degree or dh > space.max_total_degree:
            continue
        for g in _exact_degree_polys(space, dg):
            for h in _exact_degree_polys(space, dh):
                if g * h == f:
                    return g, h
    return None


def reducible_products(space: EnumSpace) -> set:
    """Coefficient keys of every product of two degree-1 polynomials.

    This is the image of the multiplication map, i.e. exactly the set of
    quadratic forms on which brute_factor succeeds; enumerating products
    once is far cheaper than factoring every form.  Keys are tuples of
    residues for (x^2, xy, y^2, x, y, 1).
    """
    lin = EnumSpace(space.field, space.q, max_total_degree=1, cap=space.cap)
    factors = list(_exact_degree_polys(lin, 1))
    if len(factors) ** 2 > space.cap:
        raise SpaceTooLarge("product sweep exceeds the cap")
    out = set()
    for g in factors:
        for h in factors:
            f = g * h
            out.add(quadratic_key(f))
    return out


def quadratic_key(f: WeylPoly) -> Tuple[int, int, int, int, int, int]:
    """Residue tuple (a, b, c, d, e, k) of a polynomial of degree <= 2."""
    return (
        f.coeff(2, 0).value,
        f.coeff(1, 1).value,
        f.coeff(0, 2).value,
        f.coeff(1, 0).value,
        f.coeff(0, 1).value,
        f.coeff(0, 0).value,
    )


def brute_divides(a: WeylPoly, c: WeylPoly, space: EnumSpace) -> Optional[DivisionWitness]:
    """Exhaustive cofactor search for c = a*b (tried first) or c = b*a.

    Candidates have the exact complementary total degree, and their leading
    term is pinned in advance: leading terms multiply in the associated
    graded algebra, so any cofactor's leading term is forced by those of a
    and c.  The scan is complete under those two provable constraints.
    """
    if a.is_zero():
        raise ZeroDivisor("division by the zero polynomial")
    alg = space.algebra()
    if c.is_zero():
        return DivisionWitness("right", alg.zero())
    d = c.total_degree() - a.total_degree()
    if d < 0 or d > space.max_total_degree:
        return None
    (ia, ja), ca = a.leading_term()
    (ic, jc), cc = c.leading_term()
    ib, jb = ic - ia, jc - ja
    if ib < 0 or jb < 0:
        return None
    q = alg.q
    for side in ("right", "left"):
        # leading coefficient of the product x^i y^j * x^k y^l is q^(j*k)
        twist = q ** (ja * ib) if side == "right" else q ** (jb * ia)
        cb = cc / (ca * twist)
        for b in _cofactor_candidates(space, alg, d, (ib, jb), cb):
            if side == "right":
                if a * b == c:
                    return DivisionWitness("right", b)
            else:
                if b * a == c:
                    return DivisionWitness("left", b)
    return None


def _cofactor_candidates(space, alg, degree, lead_mono, lead_coeff):
    """Polynomials of the given total degree with the given leading term."""
    support = [m for m in _monomials_up_to(degree) if m != lead_mono]
    p = space.field.p
    head = alg.monomial(*lead_mono, lead_coeff)
    for n in range(p ** len(support)):
        terms = {}
        m = n
        for mono in support:
            digit = m % p
            if digit:
                terms[mono] = digit
            m //= p
        yield head + alg.from_terms(terms)


# -- prime counterexample search -------------------------------------------------


def prime_counterexample_search(
    f: WeylPoly, space: EnumSpace
) -> Optional[Tuple[WeylPoly, WeylPoly]]:
    """A pair (b, c) with f | b*c while f divides neither b nor c, or None.

    The search is exhaustive over all b, c in the space up to scalar
    multiples of b (scaling either side changes nothing).  For fixed b the
    admissible c form a linear subspace: b*c lies in the span of the left
    or right multiples of f, so candidates come out of an exact nullspace
    computation mod p rather than a quadratic-size scan.  None therefore
    certifies "no counterexample up to the bound" (it is not a primality
    proof).
    """
    deg_f = f.total_degree()
    if deg_f is None or deg_f == 0:
        raise UnitInput("counterexample search needs a nonzero nonunit")
    alg = space.algebra()
    p = space.field.p
    maxdeg = space.max_total_degree
    c_monos = _monomials_up_to(maxdeg)
    card = space.cardinality()
    if (card // (p - 1)) * card > space.cap:
        raise SpaceTooLarge("pair space exceeds the cap")
    prod_monos = _monomials_up_to(2 * maxdeg)
    prod_index = {m: i for i, m in enumerate(prod_monos)}

    def vec(poly: WeylPoly) -> List[int]:
        out = [0] * len(prod_monos)
        for mono, coeff in poly.terms.items():
            out[prod_index[mono]] = coeff.value
        return out

    def cvec(poly: WeylPoly) -> List[int]:
        return [poly.coeff(*m).value for m in c_monos]

    cof_deg = 2 * maxdeg - deg_f
    if cof_deg < 0:
        return None
    cof_monos = _monomials_up_to(cof_deg)
    mult_cols = {
        "right": [vec(f * alg.monomial(*m)) for m in cof_monos],
        "left": [vec(alg.monomial(*m) * f) for m in cof_monos],
    }
    # Divisibility of a candidate of degree <= maxdeg by f is membership in
    # one of two exact subspaces: the right multiples f*m and the left
    # multiples m*f.  Their union is NOT a subspace, so keep them apart.
    small_deg = maxdeg - deg_f
    small = [] if small_deg < 0 else _monomials_up_to(small_deg)
    w_right = _linalg.row_space_mod([cvec(f * alg.monomial(*m)) for m in small], p) if small else []
    w_left = _linalg.row_space_mod([cvec(alg.monomial(*m) * f) for m in small], p) if small else []

    def divisible(v: List[int]) -> bool:
        return _linalg.in_span_mod(w_right, v, p) or _linalg.in_span_mod(w_left, v, p)

    for b in _monic_representatives(space, alg):
        if b.total_degree() == 0:
            continue
        if divisible(cvec(b)):
            continue
        b_cols = [vec(b * alg.monomial(*m)) for m in c_monos]
        for side in ("right", "left"):
            cols = b_cols + [[-v for v in col] for col in mult_cols[side]]
            rows = [[col[r] for col in cols] for r in range(len(prod_monos))]
            spanning = []
            for basis_vec in _linalg.nullspace_mod(rows, p):
                v = basis_vec[: len(c_monos)]
                if any(v):
                    spanning.append(v)
            good = _pick_outside(spanning, w_right, w_left, p)
            if good is None:
                continue
            c = alg.from_terms({m: good[i] for i, m in enumerate(c_monos)})
            if divides(f, b * c) is not None and divides(f, b) is None and divides(f, c) is None:
                return b, c
    return None


def _monic_representatives(space: EnumSpace, alg: WeylAlgebra) -> Iterator[WeylPoly]:
    """One representative per scalar class: first nonzero coefficient 1."""
    p = space.field.p
    support = space.support
    for n in range(1, p ** len(support)):
        digits = []
        m = n
        for _ in support:
            digits.append(m % p)
            m //= p
        first = next(i for i, d in enumerate(digits) if d)
        if digits[first] != 1:
            continue
        yield alg.from_terms({mono: d for mono, d in zip(support, digits) if d})


def _pick_outside(spanning: List[List[int]], w_right, w_left, p: int) -> Optional[List[int]]:
    """A nonzero vector in span(spanning) avoiding both given subspaces.

    Such a vector exists iff the span is contained in neither subspace (a
    vector space is never the union of two proper subspaces).  When both
    containments fail, either some spanning vector already works or the sum
    of one escaping each does, so the construction below is exact.
    """
    u1 = next((v for v in spanning if not _linalg.in_span_mod(w_right, v, p)), None)
    u2 = next((v for v in spanning if not _linalg.in_span_mod(w_left, v, p)), None)
    if u1 is None or u2 is None:
        return None
    if not _linalg.in_span_mod(w_left, u1, p):
        return u1
    if not _linalg.in_span_mod(w_right, u2, p):
        return u2
    return [(a + b) % p for a, b in zip(u1, u2)]
