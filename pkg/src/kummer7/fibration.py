"""The elliptic modular surface Y for Gamma_1(7).

Symbolic checks on its explicit models, the singular fibres read off from
the j-invariant, and the Legendre-symbol point count that yields a_p.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from functools import reduce
from typing import Iterable, Optional, Sequence, Union

import numpy as np

from .errors import BadPrime, NoSingularFibers, UnsupportedFibration
from .finitefield import PrimeField, build_legendre_table
from .models import (
    I1_CUBIC,
    RHO_Y,
    j_invariant_factored,
    p1_poly,
    p1_x_coefficients,
    resolved_chart_form,
    tate_affine,
    tate_normal_form,
    weierstrass_form,
)
from .polynomials import (
    Poly,
    cubic_discriminant,
    primitive,
    rational_roots,
    root_multiplicity,
    squarefree_factorization,
    udeg,
    udivmod,
    ueval,
    ugcd,
    utrim,
)

FIBER_EULER_SUM = 24  # Euler number of a K3 surface


# -- rational functions and fibre types --------------------------------------


@dataclass(frozen=True)
class RationalFunctionQ:
    """num/den in lowest terms, integer coefficients, den with positive leading term."""

    num: tuple[int, ...]
    den: tuple[int, ...]

    def __post_init__(self):
        num, den = utrim(self.num), utrim(self.den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        g = ugcd(num, den) if num else [1]
        num, _ = udivmod(num, g)
        den, _ = udivmod(den, g)
        scale = lcm(*(Fraction(c).denominator for c in num + den))
        num = [Fraction(c) * scale for c in num]
        den = [Fraction(c) * scale for c in den]
        content = reduce(gcd, [int(c) for c in num + den])
        if den[-1] < 0:
            content = -content
        object.__setattr__(self, "num", tuple(int(c) // content for c in num))
        object.__setattr__(self, "den", tuple(int(c) // content for c in den))

    @property
    def degrees(self) -> tuple[int, int]:
        return udeg(self.num), udeg(self.den)

    def __call__(self, t) -> Fraction:
        d = ueval(self.den, Fraction(t))
        if d == 0:
            raise ZeroDivisionError(f"pole at t={t}")
        return Fraction(ueval(self.num, Fraction(t))) / d

    def pole_order(self, t) -> int:
        """Order of the pole at a rational point, or at ``"infinity"``."""
        if t == "infinity":
            dn, dd = self.degrees
            return max(dn - dd, 0)
        return root_multiplicity(self.den, Fraction(t))


@dataclass(frozen=True)
class PolynomialRoot:
    """One of the roots of an integer polynomial with no rational roots, by index."""

    poly: tuple[int, ...]
    index: int

    def __str__(self):
        terms = []
        for k in range(len(self.poly) - 1, -1, -1):
            c = self.poly[k]
            if not c:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if mono and abs(c) == 1:
                coef = "-" if c < 0 else "+"
            else:
                coef = f"{c:+d}"
            terms.append(f"{coef}{mono}")
        body = " ".join(terms).lstrip("+")
        return f"root {self.index + 1} of {body}"


Location = Union[Fraction, str, PolynomialRoot]


@dataclass(frozen=True)
class Fiber:
    location: Location
    n: int

    @property
    def kodaira(self) -> str:
        return f"I{self.n}"

    def __str__(self):
        loc = f"t={self.location}" if isinstance(self.location, Fraction) else str(self.location)
        if self.location == "infinity":
            loc = "t=infinity"
        return f"{self.kodaira} at {loc}"


@dataclass(frozen=True)
class FiberConfiguration:
    fibers: tuple[Fiber, ...]

    @property
    def total(self) -> int:
        return sum(f.n for f in self.fibers)

    @property
    def type_counts(self) -> Counter:
        return Counter(f.n for f in self.fibers)

    def indices(self) -> list[int]:
        return [f.n for f in self.fibers]

    def __iter__(self):
        return iter(self.fibers)

    def __len__(self):
        return len(self.fibers)


def j_invariant_of_fibration() -> RationalFunctionQ:
    num, den = j_invariant_factored()
    return RationalFunctionQ(tuple(num), tuple(den))


def classify_fibers(j: RationalFunctionQ, expected_total: Optional[int] = None) -> FiberConfiguration:
    """One I_n fibre for every pole of order n of j, including t = infinity.

    Only valid for semi-stable fibrations.  If ``expected_total`` is given the
    fibre indices must add up to it; otherwise some fibre is additive and
    :class:`UnsupportedFibration` is raised.
    """
    fibers: list[Fiber] = []
    for part, mult in squarefree_factorization(list(j.den)):
        rest = part
        for r in rational_roots(part):
            fibers.append(Fiber(r, mult))
            rest, _ = udivmod(rest, [-r, 1])
        if udeg(rest) > 0:
            tag = tuple(primitive(rest))
            fibers.extend(Fiber(PolynomialRoot(tag, i), mult) for i in range(udeg(rest)))
    at_inf = j.pole_order("infinity")
    if at_inf:
        fibers.append(Fiber("infinity", at_inf))
    if not fibers:
        raise NoSingularFibers("j has no poles: the fibration is isotrivial or smooth")
    config = FiberConfiguration(tuple(fibers))
    if expected_total is not None and config.total != expected_total:
        raise UnsupportedFibration(
            f"fibre indices sum to {config.total}, expected {expected_total}; "
            "non-multiplicative fibres are not handled"
        )
    return config


def builtin_fibers() -> FiberConfiguration:
    return classify_fibers(j_invariant_of_fibration(), expected_total=FIBER_EULER_SUM)


# -- symbolic model checks -------------------------------------------------


def verify_model_identity(tate: Optional[Poly] = None) -> bool:
    """Check that the coordinate change x = x't^2, y = y't^2(t-1),
    z = x'/(t-1) + y' + z' turns the Tate model into the resolved-chart form.

    The substitution introduces powers of 1/(t-1) through z; these are
    cleared term by term and the result must equal t^4 (t-1)^(1+d) times the
    chart form, where d is the z-degree of the Tate model.
    """
    f = tate_normal_form() if tate is None else tate
    vars = f.vars
    x, y, z, t = Poly.generators(vars)
    d = f.degree("z")
    z_num = x + (t - 1) * (y + z)
    cleared = Poly(vars)
    for k in range(d + 1):
        piece = f.coefficient_in("z", k)
        if not piece:
            continue
        piece = piece.subs({"x": x * t**2, "y": y * t**2 * (t - 1)})
        cleared = cleared + piece * z_num**k * (t - 1) ** (d - k)
    return cleared == t**4 * (t - 1) ** (1 + d) * resolved_chart_form()


def verify_weierstrass_reduction() -> bool:
    """Completing the square in y sends 4 * (Tate model) to the Weierstrass form."""
    f = tate_affine()
    vars = f.vars
    x, y, t = Poly.generators(vars)
    half = Fraction(1, 2)
    a1 = 1 + t - t**2
    a3 = t**2 - t**3
    shifted = f.subs({"y": y - half * a1 * x - half * a3})
    return 4 * shifted == weierstrass_form()


def verify_p1_scaling() -> bool:
    """16 * W(x/4, y/8) == y^2 - p1(x, t) for the Weierstrass form W."""
    w = weierstrass_form()
    x, y, t = Poly.generators(w.vars)
    scaled = 16 * w.subs({"x": Fraction(1, 4) * x, "y": Fraction(1, 8) * y})
    p1 = p1_poly().subs({"x": x, "t": t})
    return scaled == y**2 - p1


# (point, fibre) pairs on the resolved chart; fibre is a t-value or "infinity"
SINGULAR_POINTS = {
    "P1": ((1, 0, 1), 0),
    "P2": ((1, 1, 0), 0),
    "P3": ((1, 0, 0), 0),
    "Q1": ((0, 0, 1), 1),
    "Q2": ((0, 1, 0), 1),
    "Q3": ((1, 1, 0), 1),
    "R1": ((0, 0, 1), "infinity"),
    "R2": ((0, 1, -1), "infinity"),
}


def _fiber_form(fiber) -> Poly:
    """The chart form restricted to one fibre, as a polynomial in x, y, z."""
    f = resolved_chart_form()
    if fiber == "infinity":
        g = f.reverse("t", "s")
        value, name = 0, "s"
    else:
        g, value, name = f, fiber, "t"
    gens = Poly.generators(("x", "y", "z"))
    return g.subs({"x": gens[0], "y": gens[1], "z": gens[2], name: value})


def is_singular_point(point: Sequence[int], fiber) -> bool:
    """F and all three partials in x, y, z vanish at ``point`` on the fibre."""
    g = _fiber_form(fiber)
    values = dict(zip(("x", "y", "z"), point))
    if g.evaluate(values) != 0:
        return False
    return all(g.derivative(v).evaluate(values) == 0 for v in ("x", "y", "z"))


def singular_points_check() -> bool:
    return all(is_singular_point(pt, fib) for pt, fib in SINGULAR_POINTS.values())


def discriminant_in_x() -> list[int]:
    """disc_x(p1) as ascending integer t-coefficients."""
    p1 = p1_poly()
    a, b, c, d = (p1.coefficient_in("x", k) for k in (3, 2, 1, 0))
    return [int(v) for v in cubic_discriminant(a, b, c, d).univariate("t")]


def discriminant_rational_roots() -> list[Fraction]:
    return rational_roots(discriminant_in_x())


def discriminant_divisible_by_i1_cubic() -> bool:
    _, rem = udivmod(discriminant_in_x(), I1_CUBIC)
    return not rem


# -- point counting --------------------------------------------------------


def surface_bad_reason(p: int) -> Optional[str]:
    if p in (2, 3):
        return "characteristic 2 and 3 are excluded"
    if p == 7:
        return "7 divides the level"
    return None


def _require_table(field: PrimeField) -> PrimeField:
    return field if field.legendre_table is not None else build_legendre_table(field)


def p1_values(field: PrimeField, ts: Iterable[int]) -> np.ndarray:
    """Rows p1(x, t) mod p over all x, one row per t."""
    p = field.p
    ts = np.asarray(list(ts), dtype=np.int64)
    coeffs = []
    for c in p1_x_coefficients():
        acc = np.zeros_like(ts)
        for a in reversed(c):
            acc = (acc * ts + a % p) % p
        coeffs.append(acc[:, None])
    a2, a1, a0 = coeffs
    xs = np.arange(p, dtype=np.int64)[None, :]
    return ((((xs + a2) * xs) % p + a1) % p * xs % p + a0) % p


def p1_character_sum(field: PrimeField, block: int = 1 << 20) -> int:
    """S1 = sum over (x, t) in F_p^2 of chi(p1(x, t))."""
    field = _require_table(field)
    p = field.p
    rows = max(1, block // p)
    total = 0
    for start in range(0, p, rows):
        vals = p1_values(field, range(start, min(p, start + rows)))
        total += int(field.legendre_table[vals].sum(dtype=np.int64))
    return total


def count_Y(field: PrimeField, rho: int = RHO_Y) -> tuple[int, int]:
    """(#Y(F_p), a_p) with #Y = S1 + p^2 + rho*p and a_p = #Y - p^2 - rho*p - 1."""
    p = field.p
    reason = surface_bad_reason(p)
    if reason:
        raise BadPrime(p, reason)
    s1 = p1_character_sum(field)
    count = s1 + p * p + rho * p
    return count, count - p * p - rho * p - 1
