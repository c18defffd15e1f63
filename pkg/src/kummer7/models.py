"""Built-in equations for the Gamma_1(7) elliptic modular surface.

All models are exact integer polynomials.  Variable order is fixed per model
and recorded in the ``vars`` attribute of each :class:`Poly`.
"""

from __future__ import annotations

from fractions import Fraction

from .polynomials import Poly, umul, upow

# Ascending coefficients in t.
T2_T_1 = [1, -1, 1]                                  # t^2 - t + 1
SEXTIC = [1, 5, -10, -15, 30, -11, 1]                # t^6 - 11t^5 + 30t^4 - 15t^3 - 10t^2 + 5t + 1
I1_CUBIC = [1, 5, -8, 1]                             # t^3 - 8t^2 + 5t + 1

# p1(x, t) = x^3 + A2(t) x^2 + A1(t) x + A0(t)
_A2 = [1, 2, 3, -6, 1]                               # t^4 - 6t^3 + 3t^2 + 2t + 1
_A1 = [0, 0, 8, 0, -16, 8]                           # 8t^2 (t^3 - 2t^2 + 1)
_A0 = [0, 0, 0, 0, 16, -32, 16]                      # 16 t^4 (t - 1)^2

RHO_Y = 20  # Picard number of the smooth surface


def p1_x_coefficients() -> tuple[list[int], list[int], list[int]]:
    """(A2, A1, A0) as ascending t-coefficient lists."""
    return list(_A2), list(_A1), list(_A0)


def _in_t(vars, coeffs) -> Poly:
    return Poly.from_univariate(vars, "t", coeffs)


def p1_poly() -> Poly:
    """x^3 + (t^4-6t^3+3t^2+2t+1)x^2 + 8t^2(t^3-2t^2+1)x + 16t^4(t-1)^2 in Z[x, t]."""
    vars = ("x", "t")
    x, _ = Poly.generators(vars)
    return x**3 + _in_t(vars, _A2) * x**2 + _in_t(vars, _A1) * x + _in_t(vars, _A0)


def tate_normal_form(xy_coeff=(1, 1, -1)) -> Poly:
    """Homogenised Tate model of the universal curve with a 7-torsion section.

    y^2 z + a1(t) x y z + (t^2 - t^3) y z^2 = x^3 + (t^2 - t^3) x^2 z,
    where a1(t) = 1 + t - t^2 by default.  ``xy_coeff`` gives a1 as ascending
    t-coefficients so that perturbed models can be built for negative tests.
    """
    vars = ("x", "y", "z", "t")
    x, y, z, _ = Poly.generators(vars)
    a1 = _in_t(vars, list(xy_coeff))
    b = _in_t(vars, [0, 0, 1, -1])
    return y**2 * z + a1 * x * y * z + b * y * z**2 - x**3 - b * x**2 * z


def tate_affine(xy_coeff=(1, 1, -1)) -> Poly:
    """Dehomogenised (z = 1) Tate model in Z[x, y, t]."""
    f = tate_normal_form(xy_coeff)
    vars = ("x", "y", "t")
    x, y, t = Poly.generators(vars)
    return f.subs({"x": x, "y": y, "z": Poly.const(vars, 1), "t": t})


def weierstrass_form() -> Poly:
    """4y^2 - (4x^3 + A2 x^2 + (A1/4) x + A0/16), the model with the xy and y terms removed."""
    vars = ("x", "y", "t")
    x, y, _ = Poly.generators(vars)
    a2 = _in_t(vars, _A2)
    a1 = _in_t(vars, [Fraction(c, 4) for c in _A1])
    a0 = _in_t(vars, [Fraction(c, 16) for c in _A0])
    return 4 * y**2 - (4 * x**3 + a2 * x**2 + a1 * x + a0)


def resolved_chart_form() -> Poly:
    """t(t-1)x(x-y)(y+z) + (t-1)(x-y-z)yz + t(x-y)xz in Z[x, y, z, t]."""
    vars = ("x", "y", "z", "t")
    x, y, z, t = Poly.generators(vars)
    return t * (t - 1) * x * (x - y) * (y + z) + (t - 1) * (x - y - z) * y * z + t * (x - y) * x * z


def j_invariant_factored() -> tuple[list[int], list[int]]:
    """Numerator and denominator (ascending t-coefficients) of j, as products."""
    num = umul(upow(T2_T_1, 3), upow(SEXTIC, 3))
    den = umul(umul(upow([0, 1], 7), upow([-1, 1], 7)), I1_CUBIC)
    return num, den
