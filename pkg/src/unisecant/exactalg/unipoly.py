"""Dense univariate polynomials over Q.

The elimination workhorse: resultants (Sylvester determinant, evaluated
fraction-free), discriminants, squarefree parts, Yun squarefree
decomposition, and rational-root extraction.  Root multiplicity data from
these routines is what turns "count distinct complex roots" questions into
exact degree arithmetic, with no root isolation anywhere.

Rational-root extraction and irreducible factorization over Q are delegated
to sympy (Zassenhaus/LLL); everything else is self-contained.
"""

from __future__ import annotations

from fractions import Fraction

import sympy

from ..errors import DomainError
from .rationals import bareiss_det_int, clear_denominators


class UnivariatePoly:
    """A polynomial in one variable with exact rational coefficients.

    Coefficients are stored dense, ascending; the zero polynomial stores an
    empty tuple and reports degree -1.  Instances are immutable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *args):
        raise AttributeError("UnivariatePoly is immutable")

    @classmethod
    def zero(cls) -> "UnivariatePoly":
        return cls(())

    @classmethod
    def one(cls) -> "UnivariatePoly":
        return cls((1,))

    @classmethod
    def x(cls) -> "UnivariatePoly":
        return cls((0, 1))

    @classmethod
    def constant(cls, c) -> "UnivariatePoly":
        return cls((c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lc(self) -> Fraction:
        if not self.coeffs:
            raise DomainError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __eq__(self, other) -> bool:
        return isinstance(other, UnivariatePoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "UnivariatePoly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*x")
            else:
                terms.append(f"{c}*x^{i}")
        return "UnivariatePoly(" + " + ".join(terms) + ")"

    def __add__(self, other) -> "UnivariatePoly":
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UnivariatePoly([self[i] + other[i] for i in range(n)])

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self) -> "UnivariatePoly":
        return UnivariatePoly([-c for c in self.coeffs])

    def __sub__(self, other) -> "UnivariatePoly":
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other) -> "UnivariatePoly":
        other = _coerce(other)
        if self.is_zero() or other.is_zero():
            return UnivariatePoly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UnivariatePoly(out)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, n: int) -> "UnivariatePoly":
        if n < 0:
            raise DomainError("negative power")
        result = UnivariatePoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divmod(self, other: "UnivariatePoly"):
        """Exact polynomial division with remainder over Q."""
        other = _coerce(other)
        if other.is_zero():
            raise DomainError("division by zero polynomial")
        rem = list(self.coeffs)
        d = other.degree
        lc = other.lc()
        if self.degree < d:
            return UnivariatePoly.zero(), self
        quot = [Fraction(0)] * (self.degree - d + 1)
        for i in range(self.degree - d, -1, -1):
            c = rem[i + d] / lc
            quot[i] = c
            if c != 0:
                for j, b in enumerate(other.coeffs):
                    rem[i + j] -= c * b
        return UnivariatePoly(quot), UnivariatePoly(rem)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def derivative(self) -> "UnivariatePoly":
        return UnivariatePoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def evaluate(self, x) -> Fraction:
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift(self, a) -> "UnivariatePoly":
        """The polynomial p(x + a)."""
        a = Fraction(a)
        result = UnivariatePoly.zero()
        xa = UnivariatePoly((a, 1))
        for c in reversed(self.coeffs):
            result = result * xa + UnivariatePoly.constant(c)
        return result

    def monic(self) -> "UnivariatePoly":
        if self.is_zero():
            return self
        lc = self.lc()
        return UnivariatePoly([c / lc for c in self.coeffs])

    def scale(self, c) -> "UnivariatePoly":
        return UnivariatePoly([Fraction(c) * a for a in self.coeffs])

    def valuation(self) -> int:
        """Order of vanishing at 0; degree+1 convention avoided: zero poly errors."""
        if self.is_zero():
            raise DomainError("zero polynomial has infinite valuation")
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        raise AssertionError("unreachable")


def _coerce(p) -> UnivariatePoly:
    if isinstance(p, UnivariatePoly):
        return p
    return UnivariatePoly.constant(p)


def poly_gcd(f: UnivariatePoly, g: UnivariatePoly) -> UnivariatePoly:
    """Monic gcd over Q via the Euclidean algorithm on primitive integer parts.

    Remainders are re-primitivized each step to keep coefficient growth in
    check (primitive PRS).
    """
    a, b = f, g
    if a.is_zero():
        return b.monic() if not b.is_zero() else b
    if b.is_zero():
        return a.monic()
    a = _primitive(a)
    b = _primitive(b)
    while not b.is_zero():
        _, r = a.divmod(b)
        a, b = b, _primitive(r) if not r.is_zero() else r
    return a.monic()


def _primitive(f: UnivariatePoly) -> UnivariatePoly:
    ints, _ = clear_denominators(f.coeffs)
    return UnivariatePoly(ints)


def poly_ext_gcd(a: UnivariatePoly, b: UnivariatePoly
                 ) -> tuple[UnivariatePoly, UnivariatePoly, UnivariatePoly]:
    """Extended Euclid over Q: returns (g, u, v) with u*a + v*b = g, g monic."""
    r0, r1 = a, b
    u0, u1 = UnivariatePoly.one(), UnivariatePoly.zero()
    v0, v1 = UnivariatePoly.zero(), UnivariatePoly.one()
    while not r1.is_zero():
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    if r0.is_zero():
        return r0, u0, v0
    lc = r0.lc()
    return r0.monic(), u0.scale(1 / lc), v0.scale(1 / lc)


def invert_mod(a: UnivariatePoly, modulus: UnivariatePoly) -> UnivariatePoly:
    """Inverse of a modulo an irreducible polynomial; a must not reduce to 0."""
    g, u, _ = poly_ext_gcd(a % modulus, modulus)
    if g.degree != 0:
        raise DomainError("element is not invertible modulo the given polynomial")
    return (u.scale(1 / g.coeffs[0])) % modulus


def resultant(f: UnivariatePoly, g: UnivariatePoly) -> Fraction:
    """Sylvester resultant of f and g, exact.

    Zero iff f and g share a root over the algebraic closure.  Computed as
    the Sylvester determinant after clearing denominators (Bareiss), with
    res(a·F, G) = a^deg(G)·res(F, G) bookkeeping to undo the clearing.
    """
    if f.is_zero() and g.is_zero():
        raise DomainError("resultant of two zero polynomials is undefined")
    if f.is_zero() or g.is_zero():
        # res(0, g) = 0 unless g is a nonzero constant (empty determinant).
        nz = g if f.is_zero() else f
        return Fraction(1) if nz.degree == 0 else Fraction(0)
    m, n = f.degree, g.degree
    if m == 0:
        return f.coeffs[0] ** n
    if n == 0:
        return g.coeffs[0] ** m
    fi, _ = clear_denominators(f.coeffs)
    gi, _ = clear_denominators(g.coeffs)
    # F = cf*f with F the primitive integer image, so
    # res(f, g) = res(F, G) / (cf^n * cg^m).
    cf = Fraction(fi[-1], 1) / f.lc()
    cg = Fraction(gi[-1], 1) / g.lc()
    size = m + n
    rows = []
    for i in range(n):
        row = [0] * size
        for j, c in enumerate(reversed(fi)):
            row[i + j] = c
        rows.append(row)
    for i in range(m):
        row = [0] * size
        for j, c in enumerate(reversed(gi)):
            row[i + j] = c
        rows.append(row)
    det = bareiss_det_int(rows)
    return Fraction(det) / (cf**n * cg**m)


def discriminant(f: UnivariatePoly) -> Fraction:
    """disc(f) = (-1)^(d(d-1)/2) res(f, f') / lc(f); zero iff f has a repeated root."""
    d = f.degree
    if d < 1:
        raise DomainError("discriminant requires degree >= 1")
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    return sign * resultant(f, f.derivative()) / f.lc()


def squarefree_part(f: UnivariatePoly) -> UnivariatePoly:
    """f / gcd(f, f'), monic.  Its degree counts the distinct complex roots."""
    if f.is_zero():
        raise DomainError("squarefree part of the zero polynomial")
    if f.degree == 0:
        return UnivariatePoly.one()
    g = poly_gcd(f, f.derivative())
    q, r = f.divmod(g)
    assert r.is_zero()
    return q.monic()


def yun_decomposition(f: UnivariatePoly) -> list[tuple[UnivariatePoly, int]]:
    """Squarefree decomposition f = lc * prod f_i^i (Yun's algorithm).

    Returns [(f_i, i)] with each f_i monic squarefree, pairwise coprime,
    deg f_i >= 1.
    """
    if f.is_zero():
        raise DomainError("squarefree decomposition of the zero polynomial")
    f = f.monic()
    if f.degree == 0:
        return []
    out = []
    g = poly_gcd(f, f.derivative())
    c, _ = f.divmod(g)
    d = (f.derivative() // g) - c.derivative()
    i = 1
    while True:
        if c.degree == 0:
            break
        p = poly_gcd(c, d)
        if p.degree > 0:
            out.append((p.monic(), i))
        c2, _ = c.divmod(p)
        c = c2
        d = (d // p) - c.derivative()
        i += 1
    return out


def factor_over_q(f: UnivariatePoly) -> tuple[Fraction, list[tuple[UnivariatePoly, int]]]:
    """Irreducible factorization over Q (sympy backend).

    Returns (constant, [(monic irreducible factor, multiplicity), ...]) with
    deterministic ordering (by degree, then coefficient tuple).
    """
    if f.is_zero():
        raise DomainError("cannot factor the zero polynomial")
    x = sympy.Symbol("x")
    expr = sympy.Add(*[sympy.Rational(c.numerator, c.denominator) * x**i
                       for i, c in enumerate(f.coeffs)])
    const, factors = sympy.factor_list(sympy.Poly(expr, x, domain="QQ"))
    const = sympy.Rational(const)
    c = Fraction(int(const.p), int(const.q))
    result = []
    for poly, mult in factors:
        cs = [Fraction(int(q.p), int(q.q)) for q in poly.all_coeffs()[::-1]]
        p = UnivariatePoly(cs)
        c *= p.lc() ** int(mult)
        result.append((p.monic(), int(mult)))
    result.sort(key=lambda t: (t[0].degree, t[0].coeffs))
    return c, result


def rational_roots(f: UnivariatePoly) -> list[tuple[Fraction, int]]:
    """All rational roots with multiplicities, sorted ascending."""
    if f.is_zero():
        raise DomainError("zero polynomial")
    _, factors = factor_over_q(f)
    roots = []
    for p, mult in factors:
        if p.degree == 1:
            roots.append((-p.coeffs[0] / p.coeffs[1], mult))
    roots.sort(key=lambda t: t[0])
    return roots


def interpolate(points: list[tuple[Fraction, Fraction]]) -> UnivariatePoly:
    """Lagrange interpolation through distinct abscissae, exact over Q."""
    result = UnivariatePoly.zero()
    xs = [Fraction(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise DomainError("interpolation nodes must be distinct")
    for i, (xi, yi) in enumerate(points):
        yi = Fraction(yi)
        if yi == 0:
            continue
        num = UnivariatePoly.one()
        den = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            num = num * UnivariatePoly((-Fraction(xj), 1))
            den *= Fraction(xi) - Fraction(xj)
        result = result + num.scale(yi / den)
    return result
