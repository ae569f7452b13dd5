"""Maximal-contact linear systems on a smooth cubic and their pencils.

For a point P on a smooth cubic C = {F = 0}, the degree-k forms whose full
intersection with C is concentrated at P (the divisor (3k)P) are cut out by
3k linear conditions: expand the smooth branch of C at P as an exact power
series y = phi(x) and require the form to vanish along it to order 3k.
The conditions have rank 3k - 1 exactly when (3k)P moves in the degree-k
hyperplane class — i.e. when P's group order divides 3k — and rank 3k
otherwise, so the kernel dimension itself decides contact.

For k = 3 and a contact point the kernel is a pencil spanned by F and one
honest contact cubic g.  Its discriminant — the resultant of the three
partials of u g + F, a binary form of degree 12 — locates the singular
members; root multiplicities are the exact shadow of the Euler numbers of
the singular fibers of the associated elliptic fibration, and they drive
the two headline counts:

* flex pencils carry 2 nodal members (alpha != 0) or 1 cuspidal member
  (alpha = 0, the j = 0 class), and
* a non-flex pencil at a point of order 9 shows multiplicities {9, 1, 1, 1}
  with the 9 sitting at the unique member singular at P.

Together with the 72 primitive third-level points this assembles
9*2 + 72*4 = 306 rational unisecant cubics in general and 9*1 + 288 = 297
for the j = 0 class.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DegeneratePencilError,
    DomainError,
    UnisecantError,
    UnsupportedFieldError,
)
from .exactalg import (
    HomogeneousForm,
    ProjectivePoint,
    UnivariatePoly,
    clear_denominators,
    factor_over_q,
    interpolate,
    is_reduced_form,
    nullspace,
    rational_to_string,
    ternary_discriminant,
    yun_decomposition,
)
from .cubic import (
    WeierstrassData,
    flexes,
    is_smooth_cubic,
    j_invariant,
    normalized_curve_with_point,
    point_order,
    weierstrass_at_flex,
)
from .singular import curve_germ, multiplicity_sequence
from .torsion import primitive_contact_count

DISC_DEGREE = 12


# ---------------------------------------------------------------------------
# Contact systems
# ---------------------------------------------------------------------------

def _branch_series(germ, order: int) -> tuple[list[Fraction], bool]:
    """Power series of the smooth branch at the origin, truncated at x^order.

    Returns (coefficients a_1..a_{order-1} of y = sum a_i x^i, swapped)
    where ``swapped`` records that the roles of x and y were exchanged
    because the y-partial vanished at the origin.
    """
    cy = germ.partial_y().evaluate(0, 0)
    swapped = False
    if cy == 0:
        germ = germ.swap()
        cy = germ.partial_y().evaluate(0, 0)
        swapped = True
        if cy == 0:
            raise DomainError("point is singular on the curve; no smooth branch")
    phi = [Fraction(0)] * order
    for i in range(1, order):
        residual = _series_compose(germ, phi, i + 1)
        rho = residual[i]
        phi[i] = -rho / cy
    check = _series_compose(germ, phi, order)
    if any(c != 0 for c in check):
        raise UnisecantError("branch expansion failed to cancel")
    return phi, swapped


def _series_compose(germ, phi: list[Fraction], order: int) -> list[Fraction]:
    """Coefficients of x^0..x^{order-1} of germ(x, phi(x))."""
    powers: dict[int, list[Fraction]] = {0: [Fraction(1)] + [Fraction(0)] * (order - 1)}

    def phi_power(j: int) -> list[Fraction]:
        if j not in powers:
            prev = phi_power(j - 1)
            out = [Fraction(0)] * order
            for a, ca in enumerate(prev):
                if ca == 0:
                    continue
                for b, cb in enumerate(phi[:order - a]):
                    if cb != 0:
                        out[a + b] += ca * cb
            powers[j] = out
        return powers[j]

    out = [Fraction(0)] * order
    for (i, j), c in germ.coeffs.items():
        if i >= order:
            continue
        pw = phi_power(j)
        for a, ca in enumerate(pw[:order - i]):
            if ca != 0:
                out[i + a] += c * ca
    return out


def _monomial_germs(degree: int, p: ProjectivePoint) -> tuple[list[tuple[int, int, int]], list]:
    """Local affine germs of every degree-``degree`` monomial at p.

    Uses the same chart and translation as curve_germ so that branch
    conditions line up; returns (monomial order, germ list).
    """
    monomials = sorted(
        ((a, b, degree - a - b) for a in range(degree, -1, -1)
         for b in range(degree - a, -1, -1)),
        key=lambda e: (e[0], e[1]), reverse=True)
    germs = [curve_germ(HomogeneousForm.monomial(e), p) for e in monomials]
    return monomials, germs


@dataclass
class ContactSystem:
    """Kernel of the order-3k vanishing conditions at a point of the cubic."""

    k: int
    point: ProjectivePoint
    curve: HomogeneousForm
    basis: list[HomogeneousForm]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def multiples_dimension(self) -> int:
        """Dimension of the subspace of multiples of the cubic itself."""
        if self.k < 3:
            return 0
        return (self.k - 1) * (self.k - 2) // 2

    def is_contact_point(self) -> bool:
        """True iff the divisor (3k)P is cut by some curve not through C."""
        return self.dimension == self.multiples_dimension() + 1


def contact_system(curve: HomogeneousForm, p: ProjectivePoint, k: int) -> ContactSystem:
    """Solve the linear system {degree-k forms vanishing to order 3k at p on C}.

    The smooth branch of C at p is expanded to order 3k by undetermined
    coefficients (exact rational arithmetic); each degree-k monomial is
    restricted to the branch and the first 3k series coefficients give the
    condition matrix.  The kernel always contains the multiples of C's own
    equation; one extra dimension appears exactly at contact points.
    """
    if k < 1:
        raise DomainError("k must be >= 1")
    if not is_smooth_cubic(curve):
        raise DomainError("contact systems are defined against a smooth cubic")
    if curve.evaluate(p.coords) != 0:
        raise DomainError(f"{p} is not on the cubic")
    order = 3 * k
    cg = curve_germ(curve, p)
    phi, swapped = _branch_series(cg, order)
    monomials, germs = _monomial_germs(k, p)
    rows = [[Fraction(0)] * len(monomials) for _ in range(order)]
    for col, germ in enumerate(germs):
        if swapped:
            germ = germ.swap()
        series = _series_compose(germ, phi, order)
        for r in range(order):
            rows[r][col] = series[r]
    kernel = nullspace(rows, len(monomials))
    basis = []
    for vec in kernel:
        ints, _ = clear_denominators(vec)
        basis.append(HomogeneousForm(k, {m: Fraction(c) for m, c in zip(monomials, ints)}))
    return ContactSystem(k, p, curve, basis)


# ---------------------------------------------------------------------------
# Pencils of cubics
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PencilParameter:
    """A member parameter (s1 : s2); the member is s1*g + s2*F."""

    s1: Fraction
    s2: Fraction
    at_flex: bool = False

    def __eq__(self, other) -> bool:
        if not isinstance(other, PencilParameter):
            return NotImplemented
        return self.s1 * other.s2 == self.s2 * other.s1 and \
            (self.s1, self.s2) != (0, 0) and (other.s1, other.s2) != (0, 0)

    def __hash__(self):
        if self.s2 != 0:
            return hash(("param", self.s1 / self.s2))
        return hash(("param", None))

    def __repr__(self) -> str:
        return f"({rational_to_string(self.s1)} : {rational_to_string(self.s2)})"


@dataclass
class Pencil:
    """The contact pencil {s1 g + s2 F} at a contact point of the cubic.

    Both generators meet the cubic only at the contact point (with the full
    multiplicity 3k); g is kept non-singular at the point so the member
    singular there sits at a finite parameter.
    """

    g: HomogeneousForm
    f: HomogeneousForm
    point: ProjectivePoint
    k: int = 3

    def member(self, s1, s2) -> HomogeneousForm:
        return self.g.scale(Fraction(s1)) + self.f.scale(Fraction(s2))

    def member_at(self, param: PencilParameter) -> HomogeneousForm:
        return self.member(param.s1, param.s2)


def pencil_at(system: ContactSystem) -> Pencil:
    """Build the contact pencil from a 2-dimensional contact system.

    The non-F generator is chosen independent of F and adjusted by
    multiples of F until its gradient at the contact point is nonzero
    (always possible: the cubic is smooth there).
    """
    if system.k != 3:
        raise DomainError("pencils are built at k = 3")
    if not system.is_contact_point() or system.dimension != 2:
        raise DomainError("contact system is not a pencil")
    f = system.curve
    candidates = [v for v in system.basis if not _proportional(v, f)]
    if not candidates:
        raise UnisecantError("kernel basis degenerated to multiples of the cubic")
    g = candidates[0]
    grad = [d.evaluate(system.point.coords) for d in g.gradient()]
    if all(c == 0 for c in grad):
        g = g + f
        grad = [d.evaluate(system.point.coords) for d in g.gradient()]
        if all(c == 0 for c in grad):
            raise UnisecantError("could not make the generator smooth at the point")
    ints, _ = clear_denominators([g.coefficient(m) for m in sorted(g.coeffs)])
    g = HomogeneousForm(3, {m: Fraction(c) for m, c in zip(sorted(g.coeffs), ints)})
    return Pencil(g, f, system.point)


def _proportional(a: HomogeneousForm, b: HomogeneousForm) -> bool:
    if a.is_zero() or b.is_zero():
        return a.is_zero() and b.is_zero()
    if set(a.coeffs) != set(b.coeffs):
        return False
    expo = next(iter(a.coeffs))
    lam = a.coeffs[expo] / b.coeffs[expo]
    return all(c == lam * b.coeffs[e] for e, c in a.coeffs.items())


@dataclass
class PencilDiscriminant:
    """The degree-12 binary discriminant of a pencil of cubics.

    ``binary`` lists the integer coefficients of s1^i s2^(12-i) for
    i = 0..12 (primitive, top nonzero coefficient positive); ``affine`` is
    the slice s2 = 1 as a polynomial in u = s1/s2, so the member F = C
    itself sits at u's point at infinity and never contributes a root.
    """

    binary: tuple[int, ...]
    affine: UnivariatePoly

    def multiplicity_at_infinity(self) -> int:
        """Vanishing order at the member g, i.e. (1 : 0)."""
        return DISC_DEGREE - self.affine.degree

    def distinct_complex_roots(self) -> int:
        from .exactalg import squarefree_part
        n = squarefree_part(self.affine).degree
        return n + (1 if self.multiplicity_at_infinity() > 0 else 0)


def pencil_discriminant(pencil: Pencil) -> PencilDiscriminant:
    """Discriminant of the pencil by interpolation along the parameter.

    The resultant of the three partials of u g + F is evaluated at 13
    integer parameters (each an exact Macaulay value; unimodular retries
    keep the normalization constant) and interpolated; a 14th value checks
    the interpolation.  Degree 12 is forced by homogenization: the deficit
    of the affine slice is exactly the vanishing order at the member g.
    """
    values = []
    u = 0
    while len(values) < DISC_DEGREE + 1:
        for cand in (u, -u) if u else (0,):
            if len(values) > DISC_DEGREE:
                break
            member = pencil.member(cand, 1)
            values.append((Fraction(cand), ternary_discriminant(member)))
        u += 1
    affine = interpolate(values)
    if affine.is_zero():
        raise DegeneratePencilError("pencil discriminant vanishes identically")
    if affine.degree > DISC_DEGREE:
        raise UnisecantError("discriminant degree exceeds 12")
    probe = Fraction(DISC_DEGREE + 5)
    if affine.evaluate(probe) != ternary_discriminant(pencil.member(probe, 1)):
        raise UnisecantError("discriminant interpolation failed verification")
    coeffs = [affine[i] for i in range(DISC_DEGREE + 1)]
    ints, _ = clear_denominators(coeffs)
    top = next(i for i in range(DISC_DEGREE, -1, -1) if ints[i] != 0)
    if ints[top] < 0:
        ints = [-c for c in ints]
    normalized = UnivariatePoly(ints)
    return PencilDiscriminant(tuple(ints), normalized)


# ---------------------------------------------------------------------------
# Member classification
# ---------------------------------------------------------------------------

NODE = "node"
CUSP = "cusp"
NON_REDUCED = "non-reduced"
UNRESOLVED = "unresolved"


def classify_singular_member(member: HomogeneousForm) -> str:
    """node | cusp | non-reduced for a singular cubic member.

    A node has two distinct tangent directions (nonzero discriminant of
    the quadratic part); a simple cusp has a perfect-square quadratic part
    and multiplicity sequence [2] with the transform smooth and tangent to
    the exceptional line.  Raises UnsupportedFieldError when the singular
    point is irrational and DomainError when the member is smooth or has a
    singularity outside this classification.
    """
    if member.is_zero() or member.degree != 3:
        raise DomainError("expected a cubic member")
    if not is_reduced_form(member):
        return NON_REDUCED
    from .exactalg import rational_singular_points
    points = rational_singular_points(member)
    if not points:
        raise DomainError("member is smooth; nothing to classify")
    if len(points) > 1:
        raise DomainError("member has several singular points (reducible cubic)")
    return _classify_at(member, points[0])


def _classify_at(member: HomogeneousForm, p: ProjectivePoint) -> str:
    germ = curve_germ(member, p)
    if germ.multiplicity() != 2:
        raise DomainError("singular point is not a double point")
    cone = germ.lowest_form()
    a = cone.coeffs.get((2, 0), Fraction(0))
    b = cone.coeffs.get((1, 1), Fraction(0))
    c = cone.coeffs.get((0, 2), Fraction(0))
    if b * b - 4 * a * c != 0:
        return NODE
    tree = multiplicity_sequence(member, p, check_reduced=False)
    if tree.multiplicities() == [2]:
        return CUSP
    raise DomainError("double point is neither a node nor a simple cusp")


def member_singular_at(pencil: Pencil, p: ProjectivePoint | None = None) -> PencilParameter:
    """The unique pencil parameter whose member is singular at the contact point.

    Both generators osculate the cubic at the point, so their gradients
    there are proportional; the parameter kills the combination.  At a flex
    the contact generator is the cube of the inflection line and is itself
    singular at the point: the parameter (1 : 0) is returned with a flag.
    """
    p = p or pencil.point
    if p != pencil.point:
        raise DomainError("the singular member is computed at the pencil's contact point")
    grad_g = [d.evaluate(p.coords) for d in pencil.g.gradient()]
    grad_f = [d.evaluate(p.coords) for d in pencil.f.gradient()]
    if all(x == 0 for x in grad_f):
        raise DomainError("base cubic is singular at the contact point")
    if all(x == 0 for x in grad_g):
        return PencilParameter(Fraction(1), Fraction(0), at_flex=True)
    lam = None
    for gg, gf in zip(grad_g, grad_f):
        if gf != 0:
            lam = gg / gf
            break
    if lam is None or any(gg != lam * gf for gg, gf in zip(grad_g, grad_f)):
        raise UnisecantError("generator gradients are not proportional at the point")
    if lam == 0:
        raise UnisecantError("generator gradient vanished after normalization")
    return PencilParameter(Fraction(1), -lam)


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------

@dataclass
class MemberRecord:
    """One singular member (or conjugacy class of members) of a pencil."""

    parameter: PencilParameter | None
    marker: UnivariatePoly | None
    count: int
    multiplicity: int
    classification: str

    def to_json_dict(self) -> dict:
        out = {
            "multiplicity": str(self.multiplicity),
            "count": str(self.count),
            "classification": self.classification,
        }
        if self.parameter is not None:
            out["parameter"] = [rational_to_string(self.parameter.s1),
                                rational_to_string(self.parameter.s2)]
        if self.marker is not None:
            out["minimal_polynomial"] = [rational_to_string(c) for c in self.marker.coeffs]
        return out


@dataclass
class SingularMemberReport:
    """Root data of a pencil discriminant with member classifications."""

    discriminant: PencilDiscriminant
    records: list[MemberRecord]

    def total_multiplicity(self) -> int:
        return sum(r.count * r.multiplicity for r in self.records)

    def multiplicity_multiset(self) -> list[int]:
        out = []
        for r in self.records:
            out.extend([r.multiplicity] * r.count)
        return sorted(out, reverse=True)

    def record_at(self, param: PencilParameter) -> MemberRecord | None:
        for r in self.records:
            if r.parameter is not None and r.parameter == param:
                return r
        return None


def singular_member_report(pencil: Pencil) -> SingularMemberReport:
    """Classify every singular member of the pencil via the discriminant.

    Rational roots are classified exactly; irreducible factors of degree
    >= 2 become conjugacy-class records whose multiplicity still counts
    (classification stays unresolved, as it would need irrational singular
    points); a root at (1 : 0) classifies the generator g itself.
    """
    disc = pencil_discriminant(pencil)
    records: list[MemberRecord] = []
    for factor, mult in yun_decomposition(disc.affine):
        _, irreducibles = factor_over_q(factor)
        for irr, inner in irreducibles:
            assert inner == 1
            if irr.degree == 1:
                root = -irr.coeffs[0] / irr.coeffs[1]
                param = PencilParameter(root, Fraction(1))
                member = pencil.member_at(param)
                try:
                    cls = classify_singular_member(member)
                except (UnsupportedFieldError, DomainError):
                    cls = UNRESOLVED
                records.append(MemberRecord(param, None, 1, mult, cls))
            else:
                records.append(MemberRecord(None, irr, irr.degree, mult, UNRESOLVED))
    inf_mult = disc.multiplicity_at_infinity()
    if inf_mult > 0:
        try:
            cls = classify_singular_member(pencil.g)
        except (UnsupportedFieldError, DomainError):
            cls = UNRESOLVED
        records.append(MemberRecord(PencilParameter(Fraction(1), Fraction(0)),
                                    None, 1, inf_mult, cls))
    records.sort(key=lambda r: -r.multiplicity)
    report = SingularMemberReport(disc, records)
    if report.total_multiplicity() != DISC_DEGREE:
        raise UnisecantError("discriminant multiplicities do not sum to 12")
    return report


# ---------------------------------------------------------------------------
# The flex pencil and the headline counts
# ---------------------------------------------------------------------------

def flex_pencil_count(w: WeierstrassData) -> tuple[int, list[str]]:
    """Distinct reduced singular members of the flex pencil, with kinds.

    Members of the pencil spanned by the cube of the inflection line and
    the curve are again Weierstrass cubics with beta shifted, so the
    singular ones solve alpha^3 + 27 (beta - s)^2 = 0: two distinct nodal
    members when alpha != 0, one cuspidal member when alpha = 0.  Nodality
    for alpha != 0 is exact: the double root of 4x^3 + alpha x + beta' sits
    at x0 = -3 beta'/(2 alpha), and a triple root would force
    alpha = beta' = 0.
    """
    if not w.is_smooth():
        raise DomainError("flex pencil analysis requires a smooth curve")
    if w.alpha == 0:
        return 1, [CUSP]
    return 2, [NODE, NODE]


def flex_pencil(w: WeierstrassData) -> Pencil:
    """The pencil spanned by the inflection-line cube X0^3 and the curve."""
    g = HomogeneousForm.monomial((3, 0, 0))
    return Pencil(g, w.normal_form(), ProjectivePoint(0, 0, 1))


@dataclass
class NonflexAccounting:
    """Discriminant accounting of the pencil at a non-flex contact point."""

    report: SingularMemberReport
    singular_at_point: PencilParameter
    multiplicity_at_point: int
    classification_at_point: str
    rational_members: int

    def multiplicities(self) -> list[int]:
        return self.report.multiplicity_multiset()


def nonflex_fiber_accounting(curve: HomogeneousForm, p: ProjectivePoint
                             ) -> NonflexAccounting:
    """Pencil analysis at a rational point of order 9 (minimal level 3).

    Certifies the order by scalar multiplication, builds the contact
    pencil, and reads off the discriminant: a root of multiplicity 9 at the
    member singular at P (the nine-fold blow-up fiber) plus three simple
    roots.  The member singular at P is classified at P itself (a node).
    """
    w, ec_point = normalized_curve_with_point(curve, p)
    order = point_order(w, ec_point, 9)
    if order != 9:
        raise DomainError(
            f"accounting requires a point of exact order 9, got order {order}")
    system = contact_system(curve, p, 3)
    if not system.is_contact_point():
        raise UnisecantError("order-9 point failed the contact-dimension test")
    pencil = pencil_at(system)
    report = singular_member_report(pencil)
    param = member_singular_at(pencil)
    rec = report.record_at(param)
    if rec is None:
        raise UnisecantError("member singular at P is not a discriminant root")
    member = pencil.member_at(param)
    cls = _classify_at(member, p)
    rational = sum(r.count for r in report.records if r.parameter is not None)
    return NonflexAccounting(report, param, rec.multiplicity, cls, rational)


@dataclass
class UnisecantCount:
    """The degree-3 unisecant count with its assembly parts."""

    total: int
    j: Fraction
    flex_members: int
    primitive_points: int

    def to_json_dict(self) -> dict:
        return {
            "j": rational_to_string(self.j),
            "flex_pencil": str(self.flex_members),
            "total": str(self.total),
        }


def unisecant_count_k3(curve: HomogeneousForm) -> UnisecantCount:
    """Rational cubics meeting the smooth cubic at exactly one point.

    Assembly: each of the 9 flexes contributes the reduced singular members
    of its flex pencil (2 nodal cubics, or 1 cuspidal when j = 0), and each
    of the 72 primitive third-level points contributes 4; hence 306 in
    general and 297 exactly in the j = 0 class.
    """
    if not is_smooth_cubic(curve):
        raise DomainError("unisecant counting needs a smooth cubic")
    _, rational_flexes = flexes(curve)
    if not rational_flexes:
        raise UnsupportedFieldError("no rational flex to normalize at")
    w = weierstrass_at_flex(curve, rational_flexes[0])
    count, _kinds = flex_pencil_count(w)
    primitives = primitive_contact_count(3)
    total = 9 * count + 4 * primitives
    return UnisecantCount(total, j_invariant(w), count, primitives)


# ---------------------------------------------------------------------------
# k = 2: contact conics
# ---------------------------------------------------------------------------

IRREDUCIBLE_CONIC = "irreducible-conic"
DOUBLE_LINE = "double-line"


def contact_conic_check(curve: HomogeneousForm, p: ProjectivePoint) -> str:
    """The unique 6-fold contact divisor at p: smooth conic or double line.

    The contact system at k = 2 must be one-dimensional (p's order divides
    6); the symmetric-matrix rank of the unique conic decides: rank 3 is an
    irreducible conic, rank 1 a double line (p is then a flex).  Rank 2
    cannot occur: both lines would have to be the inflection tangent.
    """
    system = contact_system(curve, p, 2)
    if system.dimension == 0:
        raise DomainError("point does not carry a 6-fold contact divisor")
    if system.dimension != 1:
        raise UnisecantError("contact conic system has unexpected dimension")
    q = system.basis[0]
    m = _conic_matrix(q)
    det = (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
           - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
           + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))
    if det != 0:
        return IRREDUCIBLE_CONIC
    minors = [m[i][j] * m[k][l] - m[i][l] * m[k][j]
              for i, k in ((0, 1), (0, 2), (1, 2))
              for j, l in ((0, 1), (0, 2), (1, 2))]
    if any(x != 0 for x in minors):
        raise UnisecantError("rank-2 contact conic: two distinct lines cannot both osculate")
    return DOUBLE_LINE


def _conic_matrix(q: HomogeneousForm):
    half = Fraction(1, 2)
    return [
        [q.coefficient((2, 0, 0)), half * q.coefficient((1, 1, 0)), half * q.coefficient((1, 0, 1))],
        [half * q.coefficient((1, 1, 0)), q.coefficient((0, 2, 0)), half * q.coefficient((0, 1, 1))],
        [half * q.coefficient((1, 0, 1)), half * q.coefficient((0, 1, 1)), q.coefficient((0, 0, 2))],
    ]
