"""Projective elimination over Q: Macaulay resultants, discriminants,
intersection bookkeeping, and singular-locus location.

Three capabilities live here.

* The Macaulay resultant of three ternary quadrics (matrix of size 15 with
  the classical 3x3 extraneous minor).  Applied to the partial derivatives
  of a cubic it decides smoothness exactly and, evaluated along a pencil,
  produces the degree-12 pencil discriminant.  Degenerate minors are
  escaped by unimodular coordinate changes, which leave the resultant value
  unchanged (the transformation factor is det^8 = 1).

* "Good position" projection: given two forms with no common component, a
  unimodular change is found so that (0:0:1) lies on neither curve and no
  common zero sits over the projection point (1:0).  The resultant in X2 is
  then a polynomial of degree exactly d1*d2 whose root multiplicities sum
  the local intersection numbers fiber by fiber — the exact bookkeeping
  behind Bezout verification and flex counting.

* Rational singular points of a plane curve, with an exact certificate that
  no irrational singular point was missed wherever the elimination data can
  provide one (and an explicit unsupported-field error where it cannot).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

import sympy

from ..errors import CommonComponentError, DomainError, UnisecantError, UnsupportedFieldError
from .forms import HomogeneousForm, ProjectivePoint
from .rationals import Mat3, det_fractions, mat3, mat3_identity, mat3_transpose, mat3_vec
from .unipoly import (
    UnivariatePoly,
    factor_over_q,
    poly_gcd,
    rational_roots,
    squarefree_part,
)
from .bipoly import BivariatePoly, resultant_y

_MAX_ATTEMPTS = 64

_DEG4_MONOMIALS = [(a, b, 4 - a - b) for a in range(4, -1, -1) for b in range(4 - a, -1, -1)]
_NON_REDUCED = [(2, 2, 0), (2, 0, 2), (0, 2, 2)]


class MacaulayDegenerate(UnisecantError):
    """The extraneous minor vanished; retry in different coordinates."""


def unimodular_matrices(seed: int = 20231115):
    """Deterministic stream of unimodular 3x3 integer matrices, identity first."""
    yield mat3_identity()
    rng = random.Random(seed)
    while True:
        m = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
        for _ in range(rng.randint(2, 4)):
            i = rng.randrange(3)
            j = rng.randrange(3)
            if i == j:
                continue
            lam = rng.choice([-3, -2, -1, 1, 2, 3])
            for k in range(3):
                m[i][k] += lam * m[j][k]
        yield mat3(m)


def _partition_index(mono) -> int:
    a, b, _ = mono
    if a >= 2:
        return 0
    if b >= 2:
        return 1
    return 2


def macaulay_resultant_quadrics(q0: HomogeneousForm, q1: HomogeneousForm,
                                q2: HomogeneousForm) -> Fraction:
    """Resultant of three ternary quadrics (Macaulay's quotient formula).

    Zero iff the quadrics have a common projective zero.  Raises
    MacaulayDegenerate if the extraneous minor vanishes for these
    coefficients; callers retry after a unimodular change of coordinates.
    """
    qs = (q0, q1, q2)
    if any(q.degree != 2 for q in qs):
        raise DomainError("all three forms must be quadrics")
    index = {m: i for i, m in enumerate(_DEG4_MONOMIALS)}
    rows = []
    for mono in _DEG4_MONOMIALS:
        i = _partition_index(mono)
        shift = list(mono)
        shift[i] -= 2
        row = [Fraction(0)] * 15
        for expo, c in qs[i].coeffs.items():
            target = (expo[0] + shift[0], expo[1] + shift[1], expo[2] + shift[2])
            row[index[target]] += c
        rows.append(row)
    minor_idx = [index[m] for m in _NON_REDUCED]
    minor = [[rows[i][j] for j in minor_idx] for i in minor_idx]
    det_minor = det_fractions(minor)
    if det_minor == 0:
        raise MacaulayDegenerate("extraneous minor vanished")
    det_full = det_fractions(rows)
    return det_full / det_minor


def ternary_discriminant(f: HomogeneousForm) -> Fraction:
    """Resultant of the three partials: zero iff the curve {f = 0} is singular.

    Normalized as the Macaulay resultant itself, which is invariant under the
    unimodular retries (det = 1), so values are comparable across calls —
    in particular along a pencil, where they interpolate to the degree-12
    discriminant.  Implemented for conics and cubics.
    """
    if f.is_zero():
        raise DomainError("zero form has no discriminant")
    if f.degree == 2:
        # Partials are linear: resultant is the determinant of the matrix of
        # coefficients, i.e. (up to 2^3) the symmetric matrix determinant.
        g = f.gradient()
        rows = [[g[i].coefficient((1, 0, 0)), g[i].coefficient((0, 1, 0)),
                 g[i].coefficient((0, 0, 1))] for i in range(3)]
        return det_fractions(rows)
    if f.degree != 3:
        raise DomainError("discriminant implemented for degrees 2 and 3 only")
    for m in unimodular_matrices():
        try:
            g = f.substitute(m).gradient()
            return macaulay_resultant_quadrics(*g)
        except MacaulayDegenerate:
            continue
    raise UnisecantError("no usable coordinates for the Macaulay resultant")


def is_smooth_form(f: HomogeneousForm) -> bool:
    """True iff {f = 0} is nonsingular over the complex numbers (deg 2 or 3)."""
    return ternary_discriminant(f) != 0


@dataclass
class FiberData:
    """Intersection data over one rational root of the eliminant."""

    x0: Fraction
    multiplicity: int
    points: list[ProjectivePoint]
    rational_complete: bool


@dataclass
class IntersectionData:
    """Good-position intersection of two curves with no common component.

    ``eliminant`` is res_X2 of the transformed forms restricted to X1 = 1:
    degree exactly d1*d2, its roots are projections of the intersection
    points and multiplicities sum local intersection numbers per fiber.
    ``points`` are the rational intersection points in the original
    coordinates; fibers record the transformed-coordinate structure.
    """

    transform: Mat3
    eliminant: UnivariatePoly
    fibers: list[FiberData]
    irrational_mass: int
    points: list[ProjectivePoint] = field(default_factory=list)
    eliminant_squarefree: bool = False


def _slice_poly(f: HomogeneousForm, x0: Fraction) -> UnivariatePoly:
    """f(x0, 1, z) as a univariate polynomial in z."""
    out: dict[int, Fraction] = {}
    for (a, b, c), q in f.coeffs.items():
        out[c] = out.get(c, Fraction(0)) + q * x0**a
    if not out:
        return UnivariatePoly.zero()
    return UnivariatePoly([out.get(i, Fraction(0)) for i in range(max(out) + 1)])


def _line_slice(f: HomogeneousForm) -> UnivariatePoly:
    """f(1, 0, z) as a univariate polynomial in z (the X1 = 0 fiber)."""
    out: dict[int, Fraction] = {}
    for (a, b, c), q in f.coeffs.items():
        if b == 0:
            out[c] = out.get(c, Fraction(0)) + q
    if not out:
        return UnivariatePoly.zero()
    return UnivariatePoly([out.get(i, Fraction(0)) for i in range(max(out) + 1)])


def _as_bivariate_x1(f: HomogeneousForm) -> BivariatePoly:
    """Chart X1 = 1, variables (x, y) = (X0, X2)."""
    return BivariatePoly.from_affine_dict(f.dehomogenize(1))


def plane_intersection(f: HomogeneousForm, g: HomogeneousForm, *,
                       want_squarefree_eliminant: bool = False) -> IntersectionData:
    """Intersect two plane curves with full Bezout bookkeeping.

    Finds a unimodular change of coordinates putting the pair in good
    position, then returns the eliminant (degree exactly deg f * deg g),
    the rational intersection points, and per-fiber multiplicity data.
    Raises CommonComponentError when the curves share a component.

    With ``want_squarefree_eliminant`` the retry loop additionally looks for
    a projection whose eliminant is squarefree; finding one certifies that
    the intersection points are pairwise distinct and transversal as scheme
    points of the eliminant.  (Such a projection exists iff all local
    intersection numbers are 1.)
    """
    if f.is_zero() or g.is_zero():
        raise DomainError("cannot intersect with the zero curve")
    if forms_share_component(f, g):
        raise CommonComponentError("curves share a component")
    d1, d2 = f.degree, g.degree
    best: IntersectionData | None = None
    attempts = 0
    for m in unimodular_matrices():
        attempts += 1
        if attempts > _MAX_ATTEMPTS:
            break
        ft = f.substitute(m)
        gt = g.substitute(m)
        if ft.coefficient((0, 0, d1)) == 0 or gt.coefficient((0, 0, d2)) == 0:
            continue
        # No common zeros over the projection point (1 : 0).
        gcd_inf = poly_gcd(_line_slice(ft), _line_slice(gt))
        if gcd_inf.degree > 0:
            continue
        try:
            elim = resultant_y(_as_bivariate_x1(ft), _as_bivariate_x1(gt))
        except DomainError:
            continue
        if elim.is_zero():
            raise CommonComponentError("curves share a component")
        if elim.degree != d1 * d2:
            continue
        sf = squarefree_part(elim)
        is_squarefree = sf.degree == elim.degree
        fibers = []
        points = []
        irrational = 0
        back = mat3_transpose(m)
        for x0, mult in rational_roots(elim):
            pf = _slice_poly(ft, x0)
            pg = _slice_poly(gt, x0)
            h = poly_gcd(pf, pg)
            fiber_points = []
            rational_degree = 0
            for z0, zmult in rational_roots(h):
                fiber_points.append(ProjectivePoint(*mat3_vec(back, (x0, Fraction(1), z0))))
                rational_degree += zmult
            complete = rational_degree == h.degree
            fibers.append(FiberData(x0, mult, fiber_points, complete))
            points.extend(fiber_points)
        covered = sum(fb.multiplicity for fb in fibers)
        irrational = d1 * d2 - covered
        data = IntersectionData(m, elim, fibers, irrational, points, is_squarefree)
        if not want_squarefree_eliminant or is_squarefree:
            return data
        best = data
    if best is not None:
        return best
    raise UnisecantError("no good projection found for the intersection")


def _sympy_expr(f: HomogeneousForm, xs):
    expr = sympy.Integer(0)
    for (a, b, c), q in f.coeffs.items():
        expr += sympy.Rational(q.numerator, q.denominator) * xs[0]**a * xs[1]**b * xs[2]**c
    return expr


def forms_share_component(f: HomogeneousForm, g: HomogeneousForm) -> bool:
    """True iff the two curves have a common component (nontrivial gcd)."""
    xs = sympy.symbols("X0 X1 X2")
    h = sympy.gcd(sympy.Poly(_sympy_expr(f, xs), *xs, domain="QQ"),
                  sympy.Poly(_sympy_expr(g, xs), *xs, domain="QQ"))
    return sympy.Poly(h, *xs).total_degree() >= 1


def form_factorization(f: HomogeneousForm) -> list[tuple[HomogeneousForm, int]]:
    """Irreducible factorization of a ternary form over Q (sympy backend)."""
    if f.is_zero():
        raise DomainError("cannot factor the zero form")
    xs = sympy.symbols("X0 X1 X2")
    expr = sympy.Integer(0)
    for (a, b, c), q in f.coeffs.items():
        expr += sympy.Rational(q.numerator, q.denominator) * xs[0]**a * xs[1]**b * xs[2]**c
    _, factors = sympy.factor_list(sympy.Poly(expr, *xs, domain="QQ"))
    out = []
    for poly, mult in factors:
        coeffs: dict[tuple[int, int, int], Fraction] = {}
        for expo, coeff in poly.terms():
            coeff = sympy.Rational(coeff)
            coeffs[tuple(int(e) for e in expo)] = Fraction(int(coeff.p), int(coeff.q))
        deg = max(sum(e) for e in coeffs)
        out.append((HomogeneousForm(deg, coeffs), int(mult)))
    out.sort(key=lambda t: (t[0].degree, sorted(t[0].coeffs.items())))
    return out


def is_reduced_form(f: HomogeneousForm) -> bool:
    """True iff f has no repeated irreducible factor."""
    return all(mult == 1 for _, mult in form_factorization(f))


def is_irreducible_form(f: HomogeneousForm) -> bool:
    factors = form_factorization(f)
    return len(factors) == 1 and factors[0][1] == 1


def rational_singular_points(f: HomogeneousForm) -> list[ProjectivePoint]:
    """All singular points of {f = 0}, each with rational coordinates.

    Exactness contract: when the routine returns, the listed points are the
    complete singular locus over the complex numbers.  If the elimination
    certificates cannot rule out an irrational singular point, an
    UnsupportedFieldError is raised — never a silently incomplete answer.
    """
    if f.is_zero():
        raise DomainError("zero form")
    if f.degree <= 1:
        return []
    g = list(f.gradient())
    combos = [(0, 0), (1, 0), (0, 1), (1, 1), (2, 1), (1, 2), (3, 2)]
    attempts = 0
    for m in unimodular_matrices():
        attempts += 1
        if attempts > _MAX_ATTEMPTS:
            break
        gt = [gi.substitute(m) for gi in g]
        for r1, r2 in combos:
            c0 = gt[0] + gt[2].scale(r1)
            c1 = gt[1] + gt[2].scale(r2)
            if c0.is_zero() or c1.is_zero():
                continue
            d = f.degree - 1
            if c0.coefficient((0, 0, d)) == 0 or c1.coefficient((0, 0, d)) == 0:
                continue
            if poly_gcd(_line_slice(c0), _line_slice(c1)).degree > 0:
                continue
            try:
                elim = resultant_y(_as_bivariate_x1(c0), _as_bivariate_x1(c1))
            except DomainError:
                continue
            if elim.is_zero() or elim.degree != d * d:
                continue
            return _singular_points_from_eliminant(gt, m, elim)
    raise UnisecantError("could not locate the singular locus")


def _singular_points_from_eliminant(gt, m, elim) -> list[ProjectivePoint]:
    back = mat3_transpose(m)
    points = []
    _, factors = factor_over_q(elim)
    for factor, _mult in factors:
        if factor.degree == 1:
            x0 = -factor.coeffs[0] / factor.coeffs[1]
            slices = [_slice_poly(gi, x0) for gi in gt]
            h = poly_gcd(slices[0], poly_gcd(slices[1], slices[2]))
            if h.degree <= 0:
                continue
            rat_deg = 0
            for z0, zmult in rational_roots(h):
                points.append(ProjectivePoint(*mat3_vec(back, (x0, Fraction(1), z0))))
                rat_deg += zmult
            if rat_deg != h.degree:
                raise UnsupportedFieldError(
                    "singular point with irrational coordinates over a rational fiber")
        else:
            # Roots of this factor are irrational; the fiber test runs in
            # the extension field Q[x]/(factor), where a non-constant gcd
            # of the three partial slices is exactly a singular point.
            if _extension_fiber_gcd_degree(gt, factor) > 0:
                raise UnsupportedFieldError(
                    "singular point with irrational coordinates")
    # Deduplicate while keeping deterministic order.
    seen = set()
    unique = []
    for p in points:
        if p not in seen:
            seen.add(p)
            unique.append(p)
    return unique


def _symbolic_slice(f: HomogeneousForm, modulus: UnivariatePoly) -> list[UnivariatePoly]:
    """f(x, 1, z) as coefficients of z^i, each a polynomial in x mod ``modulus``."""
    by_z: dict[int, UnivariatePoly] = {}
    for (a, b, c), q in f.coeffs.items():
        term = UnivariatePoly([Fraction(0)] * a + [q])
        by_z[c] = by_z.get(c, UnivariatePoly.zero()) + term
    if not by_z:
        return []
    out = []
    for i in range(max(by_z) + 1):
        out.append(by_z.get(i, UnivariatePoly.zero()) % modulus)
    return out


def _ext_trim(p: list[UnivariatePoly]) -> list[UnivariatePoly]:
    while p and p[-1].is_zero():
        p = p[:-1]
    return p


def _ext_divmod(a: list[UnivariatePoly], b: list[UnivariatePoly],
                modulus: UnivariatePoly) -> list[UnivariatePoly]:
    """Remainder of a by b in (Q[x]/modulus)[z]; modulus irreducible."""
    from .unipoly import invert_mod

    b = _ext_trim(b)
    inv_lc = invert_mod(b[-1], modulus)
    rem = [c % modulus for c in a]
    rem = _ext_trim(rem)
    while len(rem) >= len(b):
        shift = len(rem) - len(b)
        factor = (rem[-1] * inv_lc) % modulus
        for i, bc in enumerate(b):
            rem[shift + i] = (rem[shift + i] - factor * bc) % modulus
        rem = _ext_trim(rem)
        if not rem:
            break
    return rem


def _extension_fiber_gcd_degree(gt, modulus: UnivariatePoly) -> int:
    """Degree in z of gcd of the three partial slices over Q[x]/(modulus).

    A positive degree means the three partials have a common zero lying
    over a root of the (irreducible) modulus — an irrational singular
    point.  Degree zero certifies there is none.
    """
    polys = [_ext_trim(_symbolic_slice(g, modulus)) for g in gt]
    polys = [p for p in polys if p]
    if not polys:
        return 1  # all partials vanish identically over the factor
    g = polys[0]
    for p in polys[1:]:
        a, b = g, p
        while b:
            a, b = b, _ext_divmod(a, b, modulus)
        g = a
        if len(g) == 1:
            return 0
    return len(g) - 1
