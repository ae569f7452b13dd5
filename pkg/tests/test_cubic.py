"""Cubic toolkit: smoothness, flexes, normalization, j, group law, torsion."""

import random
from fractions import Fraction as F

import pytest

from unisecant.errors import DomainError
from unisecant.exactalg import (
    HomogeneousForm,
    ProjectivePoint,
    mat3,
    mat3_det,
    squarefree_part,
)
from unisecant.cubic import (
    AffineECPoint,
    WeierstrassData,
    ec_add,
    ec_scalar_mul,
    flex_intersection_data,
    flexes,
    general_weierstrass_cubic,
    hessian,
    is_smooth_cubic,
    j_invariant,
    kubert_z6_curve,
    kubert_z9_curve,
    normalized_curve_with_point,
    point_order,
    weierstrass_at_flex,
    weierstrass_normal_form,
)

H = HomogeneousForm


class TestSmoothness:
    def test_fermat_smooth(self, fermat):
        assert is_smooth_cubic(fermat)

    def test_nodal_not_smooth(self, nodal_cubic):
        assert not is_smooth_cubic(nodal_cubic)

    def test_cuspidal_normal_form_not_smooth(self):
        assert not is_smooth_cubic(weierstrass_normal_form(0, 0))

    def test_degree_checked(self):
        with pytest.raises(DomainError):
            is_smooth_cubic(H(2, {(2, 0, 0): 1}))

    def test_criterion_matches_normal_form_invariant(self):
        rng = random.Random(4)
        for _ in range(12):
            a, b = rng.randint(-5, 5), rng.randint(-5, 5)
            form = weierstrass_normal_form(a, b)
            assert is_smooth_cubic(form) == (F(a) ** 3 + 27 * F(b) ** 2 != 0)


class TestHessian:
    def test_fermat(self, fermat):
        assert hessian(fermat) == H(3, {(1, 1, 1): 216})

    def test_triangle(self):
        assert hessian(H(3, {(1, 1, 1): 1})) == H(3, {(1, 1, 1): 2})

    def test_quadric_constant(self):
        result = hessian(H(2, {(2, 0, 0): 1, (0, 2, 0): 1, (0, 0, 2): 1}))
        assert result.degree == 0 and not result.is_zero()

    def test_degree_one_rejected(self):
        with pytest.raises(DomainError):
            hessian(H(1, {(1, 0, 0): 1}))


class TestFlexes:
    def test_fermat_count_and_rational_points(self, fermat):
        count, pts = flexes(fermat)
        assert count == 9
        assert set(pts) == {ProjectivePoint(1, -1, 0), ProjectivePoint(1, 0, -1),
                            ProjectivePoint(0, 1, -1)}

    def test_normal_form_flex_at_infinity(self):
        form = weierstrass_normal_form(-4, 0)
        _, pts = flexes(form)
        assert ProjectivePoint(0, 0, 1) in pts

    def test_nine_distinct_on_fixtures(self, fermat):
        for form in (fermat, weierstrass_normal_form(-4, 0),
                     weierstrass_normal_form(0, F(-1, 4))):
            data = flex_intersection_data(form)
            assert data.eliminant.degree == 9
            assert squarefree_part(data.eliminant).degree == 9

    def test_singular_input_rejected(self, nodal_cubic):
        with pytest.raises(DomainError):
            flexes(nodal_cubic)


class TestWeierstrassNormalization:
    def test_already_normal(self):
        form = weierstrass_normal_form(-4, 0)
        w = weierstrass_at_flex(form, ProjectivePoint(0, 0, 1))
        assert (w.alpha, w.beta) == (-4, 0)
        from unisecant.exactalg import mat3_identity
        assert w.transform == mat3_identity()

    def test_fermat_lands_in_alpha_zero_class(self, fermat):
        w = weierstrass_at_flex(fermat, ProjectivePoint(1, -1, 0))
        assert w.alpha == 0 and w.beta != 0
        assert j_invariant(w) == 0

    def test_transform_really_normalizes(self, fermat):
        w = weierstrass_at_flex(fermat, ProjectivePoint(1, -1, 0))
        image = fermat.substitute(w.transform)
        normal = w.normal_form()
        scale = image.coefficient((1, 0, 2)) / normal.coefficient((1, 0, 2))
        assert image == normal.scale(scale)

    def test_non_flex_rejected(self, fermat):
        with pytest.raises(DomainError):
            weierstrass_at_flex(fermat, ProjectivePoint(1, -1, 1))

    def test_singular_cubic_rejected(self, nodal_cubic):
        with pytest.raises(DomainError):
            weierstrass_at_flex(nodal_cubic, ProjectivePoint(0, 1, 0))

    def test_general_weierstrass_conversion(self):
        # y^2 + xy = x^3 - 2x + 1 converts by completing the square.
        form = general_weierstrass_cubic(1, 0, 0, -2, 1)
        w = weierstrass_at_flex(form, ProjectivePoint(0, 0, 1))
        assert w.alpha.denominator != 0  # exact rational output
        assert is_smooth_cubic(form) == w.is_smooth()


class TestJInvariant:
    def test_alpha_zero(self):
        w = weierstrass_at_flex(weierstrass_normal_form(0, 5), ProjectivePoint(0, 0, 1))
        assert j_invariant(w) == 0

    def test_beta_zero(self):
        w = weierstrass_at_flex(weierstrass_normal_form(7, 0), ProjectivePoint(0, 0, 1))
        assert j_invariant(w) == 1728

    def test_equal_at_different_flexes(self, fermat):
        _, pts = flexes(fermat)
        values = {j_invariant(weierstrass_at_flex(fermat, p)) for p in pts}
        assert values == {F(0)}

    def test_invariant_under_coordinate_changes(self):
        form = weierstrass_normal_form(-4, 4)
        w0 = weierstrass_at_flex(form, ProjectivePoint(0, 0, 1))
        j0 = j_invariant(w0)
        rng = random.Random(12)
        done = 0
        while done < 5:
            m = mat3([[rng.randint(-3, 3) for _ in range(3)] for _ in range(3)])
            if mat3_det(m) == 0:
                continue
            moved = form.substitute(m)
            _, pts = flexes(moved)
            assert pts, "coordinate change lost all rational flexes"
            assert j_invariant(weierstrass_at_flex(moved, pts[0])) == j0
            done += 1

    def test_singular_rejected(self):
        with pytest.raises(DomainError):
            j_invariant(WeierstrassData(F(0), F(0), mat3([[1, 0, 0], [0, 1, 0], [0, 0, 1]])))


class TestGroupLaw:
    @pytest.fixture
    def w(self):
        return weierstrass_at_flex(weierstrass_normal_form(-4, 0), ProjectivePoint(0, 0, 1))

    @pytest.fixture
    def w_rank(self):
        return weierstrass_at_flex(weierstrass_normal_form(-4, 4), ProjectivePoint(0, 0, 1))

    def test_identity(self, w):
        p = AffineECPoint(0, 0)
        assert ec_add(w, p, AffineECPoint.origin()) == p

    def test_inverse(self, w_rank):
        p = AffineECPoint(1, 2)
        assert ec_add(w_rank, p, p.negate()) == AffineECPoint.origin()

    def test_two_torsion(self, w):
        p = AffineECPoint(0, 0)
        assert ec_add(w, p, p) == AffineECPoint.origin()
        assert ec_scalar_mul(w, 2, p) == AffineECPoint.origin()

    def test_scalar_zero_and_negative(self, w_rank):
        p = AffineECPoint(1, 2)
        assert ec_scalar_mul(w_rank, 0, p) == AffineECPoint.origin()
        assert ec_scalar_mul(w_rank, -3, p) == ec_scalar_mul(w_rank, 3, p).negate()

    def test_off_curve_rejected(self, w):
        with pytest.raises(DomainError):
            ec_add(w, AffineECPoint(1, 1), AffineECPoint.origin())

    def test_associativity_randomized(self, w_rank):
        rng = random.Random(31)
        pts = [ec_scalar_mul(w_rank, n, AffineECPoint(1, 2)) for n in range(-4, 5)]
        for _ in range(60):
            a, b, c = rng.choice(pts), rng.choice(pts), rng.choice(pts)
            assert ec_add(w_rank, ec_add(w_rank, a, b), c) == \
                ec_add(w_rank, a, ec_add(w_rank, b, c))

    def test_point_order_examples(self, w):
        assert point_order(w, AffineECPoint.origin(), 5) == 1
        assert point_order(w, AffineECPoint(0, 0), 5) == 2

    def test_order_exceeds_bound(self, w_rank):
        assert point_order(w_rank, AffineECPoint(1, 2), 30) is None


class TestTorsionFamilies:
    def test_z9_order_certificate(self):
        form, p = kubert_z9_curve(2)
        assert is_smooth_cubic(form)
        w, ec = normalized_curve_with_point(form, p)
        assert point_order(w, ec, 12) == 9
        assert ec_scalar_mul(w, 9, ec) == AffineECPoint.origin()
        assert ec_scalar_mul(w, 3, ec) != AffineECPoint.origin()

    def test_z9_second_parameter(self):
        form, p = kubert_z9_curve(3)
        w, ec = normalized_curve_with_point(form, p)
        assert point_order(w, ec, 12) == 9

    def test_z6_order_certificate(self):
        form, p = kubert_z6_curve(1)
        w, ec = normalized_curve_with_point(form, p)
        assert point_order(w, ec, 12) == 6

    def test_realized_minimal_levels(self):
        # A point of group order n first carries a contact divisor at level
        # n / gcd(n, 3): the smallest k with [3k]P = O.
        from math import gcd

        def realized_level(w, p):
            for k in range(1, 10):
                if ec_scalar_mul(w, 3 * k, p).infinity:
                    return k
            raise AssertionError("no level found")

        form9, p9 = kubert_z9_curve(2)
        w9, ec9 = normalized_curve_with_point(form9, p9)
        form6, p6 = kubert_z6_curve(1)
        w6, ec6 = normalized_curve_with_point(form6, p6)
        w2 = weierstrass_at_flex(weierstrass_normal_form(-4, 0), ProjectivePoint(0, 0, 1))
        cases = [
            (w9, AffineECPoint.origin(), 1),
            (w2, AffineECPoint(0, 0), 2),
            (w9, ec_scalar_mul(w9, 3, ec9), 3),   # order-3 point
            (w6, ec6, 6),
            (w9, ec9, 9),
        ]
        for w, p, order in cases:
            assert point_order(w, p, 12) == order
            assert realized_level(w, p) == order // gcd(order, 3)
