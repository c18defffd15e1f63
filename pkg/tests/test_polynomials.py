from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kummer7.polynomials import (
    Poly,
    cubic_discriminant,
    primitive,
    rational_roots,
    root_multiplicity,
    squarefree_factorization,
    udivmod,
    ugcd,
    umul,
    upow,
)

sympy = pytest.importorskip("sympy")
X, Y, T = sympy.symbols("x y t")
VARS = ("x", "y", "t")

monos = st.dictionaries(
    st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3)),
    st.integers(-9, 9),
    max_size=6,
)


def to_sympy(p: Poly):
    syms = dict(zip(VARS, (X, Y, T)))
    return sum((c * sympy.prod([syms[v] ** e for v, e in zip(p.vars, m)]) for m, c in p.terms.items()),
               sympy.Integer(0))


class TestPolyAgainstSympy:
    @given(monos, monos)
    @settings(max_examples=60)
    def test_mul_add(self, a, b):
        pa, pb = Poly(VARS, a), Poly(VARS, b)
        assert sympy.expand(to_sympy(pa * pb + pa) - (to_sympy(pa) * to_sympy(pb) + to_sympy(pa))) == 0

    @given(monos, monos)
    @settings(max_examples=40)
    def test_subs(self, a, b):
        pa, pb = Poly(VARS, a), Poly(VARS, b)
        got = pa.subs({"x": pb, "t": 3})
        want = sympy.expand(to_sympy(pa).subs({X: to_sympy(pb), T: 3}, simultaneous=True))
        assert sympy.expand(to_sympy(got) - want) == 0

    @given(monos)
    def test_derivative(self, a):
        pa = Poly(VARS, a)
        assert sympy.expand(to_sympy(pa.derivative("y")) - sympy.diff(to_sympy(pa), Y)) == 0

    @given(monos, st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3))
    def test_evaluate(self, a, x, y, t):
        pa = Poly(VARS, a)
        assert pa.evaluate({"x": x, "y": y, "t": t}) == to_sympy(pa).subs({X: x, Y: y, T: t})


class TestPolyBasics:
    def test_fraction_normalisation(self):
        x, y, t = Poly.generators(VARS)
        p = Fraction(1, 2) * x * 2
        assert p == x and p.is_integral

    def test_reverse(self):
        x, y, t = Poly.generators(VARS)
        p = t**2 * x + t + 1
        r = p.reverse("t", "s")
        assert r.vars == ("x", "y", "s")
        s = Poly.var(r.vars, "s")
        xs = Poly.var(r.vars, "x")
        assert r == xs + s + s**2

    def test_univariate(self):
        x, y, t = Poly.generators(VARS)
        assert (3 * t**2 - 1).univariate("t") == [-1, 0, 3]
        with pytest.raises(ValueError):
            (x * t).univariate("t")

    def test_cubic_discriminant(self):
        one = Poly.const(("t",), 1)
        # x^3 - x has discriminant 4
        assert cubic_discriminant(one, 0 * one, -one, 0 * one) == Poly.const(("t",), 4)


class TestUnivariate:
    def test_divmod(self):
        q, r = udivmod([1, 0, 0, 1], [1, 1])
        assert q == [1, -1, 1] and r == []

    def test_gcd(self):
        a = umul([-1, 1], [2, 0, 1])
        b = umul([-1, 1], [3, 1])
        assert ugcd(a, b) == [-1, 1]

    def test_rational_roots(self):
        f = umul(umul([0, 1], [-1, 2]), [1, 5, -8, 1])
        assert rational_roots(f) == [Fraction(0), Fraction(1, 2)]
        assert rational_roots([1, 5, -8, 1]) == []

    def test_multiplicity(self):
        f = umul(upow([-1, 1], 7), [0, 0, 1])
        assert root_multiplicity(f, 1) == 7
        assert root_multiplicity(f, 0) == 2
        assert root_multiplicity(f, 2) == 0

    def test_squarefree(self):
        f = umul(umul(upow([0, 1], 7), upow([-1, 1], 7)), [1, 5, -8, 1])
        parts = squarefree_factorization(f)
        assert parts == [([1, 5, -8, 1], 1), ([0, -1, 1], 7)]

    def test_primitive(self):
        assert primitive([Fraction(1, 2), Fraction(-3, 4)]) == [-2, 3]
