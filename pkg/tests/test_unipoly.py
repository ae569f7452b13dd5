"""Univariate layer: resultants, discriminants, squarefree machinery.

The resultant oracle is the Sylvester determinant built independently in
sympy (sympy.resultant itself normalizes signs differently in corner
cases, so the matrix determinant is the unambiguous reference).
"""

from fractions import Fraction as F

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from unisecant.errors import DomainError
from unisecant.exactalg import (
    UnivariatePoly,
    discriminant,
    interpolate,
    poly_gcd,
    rational_roots,
    resultant,
    squarefree_part,
    yun_decomposition,
)
from unisecant.exactalg.unipoly import invert_mod, poly_ext_gcd

P = UnivariatePoly


def sylvester_det_oracle(f: P, g: P):
    """Reference resultant: the Sylvester determinant, built in sympy."""
    m, n = f.degree, g.degree
    if m == 0:
        return F(f.coeffs[0]) ** n
    if n == 0:
        return F(g.coeffs[0]) ** m
    rows = []
    fc = [sympy.Rational(c.numerator, c.denominator) for c in reversed(f.coeffs)]
    gc = [sympy.Rational(c.numerator, c.denominator) for c in reversed(g.coeffs)]
    for i in range(n):
        rows.append([sympy.Integer(0)] * i + fc + [sympy.Integer(0)] * (n - 1 - i))
    for i in range(m):
        rows.append([sympy.Integer(0)] * i + gc + [sympy.Integer(0)] * (m - 1 - i))
    det = sympy.Rational(sympy.Matrix(rows).det())
    return F(int(det.p), int(det.q))


rational = st.builds(F, st.integers(-9, 9), st.integers(1, 4))
small_poly = st.lists(rational, min_size=1, max_size=6).map(P).filter(
    lambda p: not p.is_zero())


class TestResultant:
    def test_distinct_linear_factors(self):
        assert resultant(P((-1, 1)), P((1, 1))) == 2

    def test_shared_root(self):
        assert resultant(P((0, 0, 1)), P((0, 1))) == 0

    def test_quadratic_pair(self):
        # res(x^2 - 2, x^2 - 3): Sylvester determinant expands to 1.
        assert resultant(P((-2, 0, 1)), P((-3, 0, 1))) == 1

    def test_both_zero_rejected(self):
        with pytest.raises(DomainError):
            resultant(P(()), P(()))

    @settings(max_examples=60, deadline=None)
    @given(small_poly, small_poly)
    def test_matches_sylvester_determinant(self, f, g):
        assert resultant(f, g) == sylvester_det_oracle(f, g)

    @settings(max_examples=60, deadline=None)
    @given(small_poly, small_poly)
    def test_antisymmetry(self, f, g):
        sign = -1 if (f.degree * g.degree) % 2 else 1
        assert resultant(f, g) == sign * resultant(g, f)


class TestDiscriminant:
    @pytest.mark.parametrize("b,c", [(3, 1), (0, -2), (F(1, 2), F(-1, 3))])
    def test_quadratic(self, b, c):
        assert discriminant(P((c, b, 1))) == F(b) ** 2 - 4 * F(c)

    @pytest.mark.parametrize("p,q", [(2, -5), (-1, 1), (F(1, 3), F(2, 7))])
    def test_depressed_cubic(self, p, q):
        assert discriminant(P((q, p, 0, 1))) == -4 * F(p) ** 3 - 27 * F(q) ** 2

    def test_repeated_root(self):
        assert discriminant(P((1, -2, 1))) == 0

    def test_constant_rejected(self):
        with pytest.raises(DomainError):
            discriminant(P((5,)))

    @settings(max_examples=40, deadline=None)
    @given(st.lists(rational, min_size=2, max_size=9).map(P))
    def test_zero_iff_not_squarefree(self, f):
        if f.degree < 1:
            return
        sf = squarefree_part(f)
        assert (discriminant(f) == 0) == (sf != f.monic())


class TestSquarefree:
    def test_repeated_linear(self):
        f = P((-1, 1)) ** 2 * P((2, 1))
        assert squarefree_part(f) == (P((-1, 1)) * P((2, 1))).monic()

    def test_pure_power(self):
        assert squarefree_part(P((0, 0, 0, 1))) == P((0, 1))

    def test_already_squarefree(self):
        assert squarefree_part(P((1, 0, 1))) == P((1, 0, 1))

    def test_yun_structure(self):
        f = P((-1, 1)) ** 3 * P((1, 1)) ** 2 * P((0, 1))
        decomp = yun_decomposition(f)
        assert [(p, m) for p, m in decomp] == [
            (P((0, 1)), 1), (P((1, 1)), 2), (P((-1, 1)), 3)]

    def test_rational_roots_with_multiplicity(self):
        f = P((-1, 1)) ** 2 * P((2, 1)) * P((1, 0, 1))
        assert rational_roots(f) == [(F(-2), 1), (F(1), 2)]


class TestGcdAndExtension:
    def test_gcd_common_factor(self):
        f = P((-1, 1)) * P((1, 1))
        g = P((-1, 1)) * P((3, 1))
        assert poly_gcd(f, g) == P((-1, 1))

    def test_ext_gcd_bezout(self):
        a, b = P((1, 3, 1)), P((2, 1))
        g, u, v = poly_ext_gcd(a, b)
        assert u * a + v * b == g

    def test_invert_mod(self):
        mod = P((-2, 0, 1))  # x^2 - 2, irreducible
        a = P((1, 1))        # x + 1
        inv = invert_mod(a, mod)
        assert (a * inv) % mod == P.one()


class TestInterpolation:
    def test_roundtrip(self):
        f = P((F(1, 2), -3, 0, 2))
        pts = [(F(i), f.evaluate(i)) for i in range(-2, 3)]
        assert interpolate(pts) == f

    def test_distinct_nodes_required(self):
        with pytest.raises(DomainError):
            interpolate([(F(1), F(0)), (F(1), F(1))])
