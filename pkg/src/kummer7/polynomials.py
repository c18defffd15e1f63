"""Exact multivariate and univariate polynomial arithmetic over Q.

``Poly`` is a sparse polynomial in a fixed tuple of named variables.  Integer
coefficients stay ``int``; anything else is a ``Fraction``.  The univariate
helpers work on ascending coefficient lists.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Mapping, Sequence, Union

Number = Union[int, Fraction]


def _norm(c: Number) -> Number:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class Poly:
    __slots__ = ("vars", "terms")

    def __init__(self, vars: Sequence[str], terms: Mapping[tuple, Number] | None = None):
        self.vars = tuple(vars)
        clean = {}
        for mono, c in (terms or {}).items():
            if len(mono) != len(self.vars):
                raise ValueError("monomial arity does not match variables")
            if c:
                clean[tuple(mono)] = _norm(c)
        self.terms = clean

    @classmethod
    def var(cls, vars: Sequence[str], name: str) -> "Poly":
        mono = tuple(1 if v == name else 0 for v in vars)
        return cls(vars, {mono: 1})

    @classmethod
    def const(cls, vars: Sequence[str], c: Number) -> "Poly":
        return cls(vars, {(0,) * len(vars): c})

    @classmethod
    def generators(cls, vars: Sequence[str]) -> tuple["Poly", ...]:
        return tuple(cls.var(vars, v) for v in vars)

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.vars != self.vars:
                raise ValueError(f"variable mismatch {self.vars} vs {other.vars}")
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(self.vars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Poly(self.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.vars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[tuple, Number] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return Poly(self.vars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = Poly.const(self.vars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms, reverse=True):
            c = self.terms[mono]
            factors = [v if e == 1 else f"{v}^{e}" for v, e in zip(self.vars, mono) if e]
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(factors))
            elif c == -1:
                parts.append("-" + "*".join(factors))
            else:
                parts.append(f"{c}*" + "*".join(factors))
        return " + ".join(parts).replace("+ -", "- ")

    def _index(self, name: str) -> int:
        try:
            return self.vars.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r}") from None

    @property
    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.terms.values())

    def degree(self, name: str) -> int:
        i = self._index(name)
        return max((m[i] for m in self.terms), default=-1)

    def total_degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def coefficient(self, exponents: Mapping[str, int]) -> Number:
        """Coefficient of a monomial given as {var: exponent}; others are 0."""
        mono = tuple(exponents.get(v, 0) for v in self.vars)
        return self.terms.get(mono, 0)

    def coefficient_in(self, name: str, k: int) -> "Poly":
        """The coefficient of name^k, as a polynomial in the same variables."""
        i = self._index(name)
        out = {}
        for m, c in self.terms.items():
            if m[i] == k:
                out[m[:i] + (0,) + m[i + 1 :]] = c
        return Poly(self.vars, out)

    def derivative(self, name: str) -> "Poly":
        i = self._index(name)
        out = {}
        for m, c in self.terms.items():
            if m[i]:
                out[m[:i] + (m[i] - 1,) + m[i + 1 :]] = c * m[i]
        return Poly(self.vars, out)

    def evaluate(self, values: Mapping[str, Number]) -> Number:
        """Evaluate at a full assignment of every variable."""
        point = [values[v] for v in self.vars]
        total: Number = 0
        for m, c in self.terms.items():
            term = c
            for x, e in zip(point, m):
                if e:
                    term *= x**e
            total += term
        return _norm(total)

    def subs(self, mapping: Mapping[str, Union["Poly", Number]]) -> "Poly":
        """Simultaneous substitution of polynomials (or numbers) for variables."""
        target = next((img.vars for img in mapping.values() if isinstance(img, Poly)), self.vars)
        images = []
        for v in self.vars:
            img = mapping.get(v)
            if img is None:
                img = Poly.var(target, v)
            elif not isinstance(img, Poly):
                img = Poly.const(target, img)
            images.append(img)
        cache: dict[tuple[int, int], Poly] = {}

        def power(i, e):
            key = (i, e)
            if key not in cache:
                cache[key] = images[i] ** e
            return cache[key]

        result = Poly(images[0].vars if images else self.vars)
        for m, c in self.terms.items():
            term = Poly.const(result.vars, c)
            for i, e in enumerate(m):
                if e:
                    term = term * power(i, e)
            result = result + term
        return result

    def reverse(self, name: str, new_name: str | None = None) -> "Poly":
        """name^d * f(1/name) with d = deg_name(f); the chart at name = infinity."""
        i = self._index(name)
        d = self.degree(name)
        vars = self.vars if new_name is None else self.vars[:i] + (new_name,) + self.vars[i + 1 :]
        out = {}
        for m, c in self.terms.items():
            out[m[:i] + (d - m[i],) + m[i + 1 :]] = c
        return Poly(vars, out)

    def univariate(self, name: str) -> list[Number]:
        """Ascending coefficient list; requires ``name`` to be the only variable used."""
        i = self._index(name)
        d = self.degree(name)
        out: list[Number] = [0] * (d + 1)
        for m, c in self.terms.items():
            if any(e for j, e in enumerate(m) if j != i):
                raise ValueError(f"polynomial involves variables other than {name!r}")
            out[m[i]] = c
        return out

    @classmethod
    def from_univariate(cls, vars: Sequence[str], name: str, coeffs: Sequence[Number]) -> "Poly":
        i = tuple(vars).index(name)
        terms = {}
        for k, c in enumerate(coeffs):
            mono = [0] * len(vars)
            mono[i] = k
            terms[tuple(mono)] = c
        return cls(vars, terms)


# -- univariate helpers on ascending coefficient lists ----------------------


def utrim(a: Sequence[Number]) -> list[Number]:
    a = [_norm(c) for c in a]
    while a and a[-1] == 0:
        a.pop()
    return a


def udeg(a: Sequence[Number]) -> int:
    return len(utrim(a)) - 1


def uadd(a, b) -> list[Number]:
    n = max(len(a), len(b))
    return utrim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def umul(a, b) -> list[Number]:
    if not a or not b:
        return []
    out: list[Number] = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return utrim(out)


def upow(a, k: int) -> list[Number]:
    return reduce(umul, [a] * k, [1])


def udivmod(a, b) -> tuple[list[Number], list[Number]]:
    """Division with remainder over Q."""
    a = [Fraction(c) for c in utrim(a)]
    b = [Fraction(c) for c in utrim(b)]
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    while len(a) >= len(b) and a:
        k = len(a) - len(b)
        f = a[-1] / lead
        q[k] = f
        for i, c in enumerate(b):
            a[i + k] -= f * c
        a = [Fraction(c) for c in utrim(a)]
    return utrim(q), utrim(a)


def ugcd(a, b) -> list[Number]:
    """Monic gcd over Q."""
    a, b = utrim(a), utrim(b)
    while b:
        _, r = udivmod(a, b)
        a, b = b, r
    if not a:
        return []
    lead = Fraction(a[-1])
    return utrim([Fraction(c) / lead for c in a])


def uderivative(a) -> list[Number]:
    return utrim([k * c for k, c in enumerate(a)][1:])


def primitive(a) -> list[int]:
    """Integer primitive part with positive leading coefficient."""
    a = utrim(a)
    if not a:
        return []
    den = lcm(*(Fraction(c).denominator for c in a))
    ints = [int(Fraction(c) * den) for c in a]
    g = reduce(gcd, ints)
    if ints[-1] < 0:
        g = -g
    return [c // g for c in ints]


def ueval(a, x: Number) -> Number:
    acc: Number = 0
    for c in reversed(a):
        acc = acc * x + c
    return _norm(acc)


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def rational_roots(a) -> list[Fraction]:
    """Distinct rational roots, ascending, by the rational root theorem."""
    f = primitive(a)
    if not f:
        raise ValueError("zero polynomial has every root")
    roots = set()
    k = 0
    while f[k] == 0:
        k += 1
    if k:
        roots.add(Fraction(0))
    f = f[k:]
    if len(f) > 1:
        for num in _divisors(f[0]):
            for den in _divisors(f[-1]):
                for cand in (Fraction(num, den), Fraction(-num, den)):
                    if ueval(f, cand) == 0:
                        roots.add(cand)
    return sorted(roots)


def root_multiplicity(a, r: Number) -> int:
    a = utrim(a)
    if not a:
        raise ValueError("zero polynomial")
    lin = [-Fraction(r), 1]
    m = 0
    while True:
        q, rem = udivmod(a, lin)
        if rem:
            return m
        a = q
        m += 1


def squarefree_factorization(a) -> list[tuple[list[int], int]]:
    """Yun's algorithm: [(g_i, i)] with a = c * prod g_i^i, g_i squarefree, coprime."""
    f = utrim(a)
    if udeg(f) < 1:
        return []
    out = []
    fp = uderivative(f)
    g = ugcd(f, fp)
    w, _ = udivmod(f, g)
    y, _ = udivmod(fp, g)
    i = 1
    while udeg(w) > 0:
        z = uadd(y, [-c for c in uderivative(w)])
        h = ugcd(w, z)
        if udeg(h) > 0:
            out.append((primitive(h), i))
        w, _ = udivmod(w, h)
        y, _ = udivmod(z, h)
        i += 1
    return out


def cubic_discriminant(a: Poly, b: Poly, c: Poly, d: Poly) -> Poly:
    """Discriminant of a*x^3 + b*x^2 + c*x + d with polynomial coefficients."""
    return b * b * c * c - 4 * a * c**3 - 4 * b**3 * d - 27 * a * a * d * d + 18 * a * b * c * d
