"""Exact integer q-series, eta quotients and the j-function.

A :class:`QSeries` stores the coefficients of

    q^(offset24/24) * (c_0 + c_1 q + c_2 q^2 + ...) + O(q^((offset24 + 24*T)/24))

where ``T = truncation`` is the number of known coefficients.  Exponents are
tracked in 24ths so that single eta factors (leading term q^(delta/24)) are
carried exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    EtaParseError,
    SeriesDivisionError,
    SeriesFormError,
    SeriesRangeError,
)

__all__ = [
    "QSeries",
    "EtaQuotient",
    "G3",
    "G2_B",
    "U_HAUPTMODUL",
    "R_HAUPTMODUL",
    "PHI3",
    "PHI4",
    "euler_product",
    "eta_quotient_expand",
    "coefficient",
    "eisenstein_e4",
    "j_expansion",
    "poly_of_series",
    "verify_hauptmodul_identity",
    "hauptmodul_checks",
]


@dataclass(frozen=True)
class QSeries:
    offset24: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if not self.coeffs:
            raise ValueError("a QSeries needs at least one known coefficient")

    @property
    def truncation(self) -> int:
        return len(self.coeffs)

    @property
    def precision24(self) -> int:
        """Exponent (in 24ths) of the first unknown term."""
        return self.offset24 + 24 * len(self.coeffs)

    @property
    def is_classical(self) -> bool:
        return self.offset24 % 24 == 0

    @property
    def valuation(self) -> int:
        """Exponent of the leading coefficient, in whole q-powers."""
        if not self.is_classical:
            raise SeriesFormError(f"leading exponent {self.offset24}/24 is fractional")
        return self.offset24 // 24

    @classmethod
    def constant(cls, c: int, truncation: int) -> "QSeries":
        return cls(0, (c,) + (0,) * (truncation - 1))

    def __neg__(self) -> "QSeries":
        return QSeries(self.offset24, tuple(-c for c in self.coeffs))

    def __add__(self, other) -> "QSeries":
        if isinstance(other, int):
            other = QSeries.constant(other, max(1, self.precision24 // 24))
        if not isinstance(other, QSeries):
            return NotImplemented
        if (self.offset24 - other.offset24) % 24:
            raise SeriesFormError("cannot add series whose exponents differ by a fraction")
        offset = min(self.offset24, other.offset24)
        prec = min(self.precision24, other.precision24)
        n = (prec - offset) // 24
        if n < 1:
            raise SeriesRangeError("sum has no known coefficients")
        out = [0] * n
        for s in (self, other):
            shift = (s.offset24 - offset) // 24
            for k, c in enumerate(s.coeffs):
                if shift + k >= n:
                    break
                out[shift + k] += c
        return QSeries(offset, out)

    __radd__ = __add__

    def __sub__(self, other) -> "QSeries":
        return self + (-other)

    def __rsub__(self, other) -> "QSeries":
        return (-self) + other

    def __mul__(self, other) -> "QSeries":
        if isinstance(other, int):
            return QSeries(self.offset24, tuple(other * c for c in self.coeffs))
        if not isinstance(other, QSeries):
            return NotImplemented
        n = min(len(self.coeffs), len(other.coeffs))
        a, b = self.coeffs, other.coeffs
        out = [0] * n
        for i in range(n):
            ai = a[i]
            if ai:
                for j in range(n - i):
                    out[i + j] += ai * b[j]
        return QSeries(self.offset24 + other.offset24, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "QSeries":
        if k < 0:
            return self.inverse() ** (-k)
        result = QSeries.constant(1, len(self.coeffs))
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def normalized(self) -> "QSeries":
        """Drop leading zero coefficients, moving the offset accordingly."""
        k = 0
        while k < len(self.coeffs) and self.coeffs[k] == 0:
            k += 1
        if k == len(self.coeffs):
            raise SeriesDivisionError("series is zero to known precision")
        if k == 0:
            return self
        return QSeries(self.offset24 + 24 * k, self.coeffs[k:])

    def inverse(self) -> "QSeries":
        s = self.normalized()
        lead = s.coeffs[0]
        if lead not in (1, -1):
            raise SeriesDivisionError(f"leading coefficient {lead} is not a unit")
        a = s.coeffs
        n = len(a)
        b = [0] * n
        b[0] = lead
        for k in range(1, n):
            acc = 0
            for i in range(1, k + 1):
                acc += a[i] * b[k - i]
            b[k] = -lead * acc
        return QSeries(-s.offset24, b)

    def __truediv__(self, other) -> "QSeries":
        if isinstance(other, int):
            other = QSeries.constant(other, len(self.coeffs))
        return self * other.inverse()

    def coefficient(self, n: int) -> int:
        return coefficient(self, n)

    def coefficients_from(self, start: int, count: int) -> list[int]:
        """Coefficients of q^start .. q^(start+count-1), zero below the offset."""
        return [self._coefficient_or_zero(e) for e in range(start, start + count)]

    def _coefficient_or_zero(self, n: int) -> int:
        if not self.is_classical:
            raise SeriesFormError(f"leading exponent {self.offset24}/24 is fractional")
        if n < self.valuation:
            return 0
        return coefficient(self, n)

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}*q^{_format_exponent(self.offset24 + 24 * k)}")
        body = " + ".join(terms) if terms else "0"
        return f"{body} + O(q^{_format_exponent(self.precision24)})"


def _format_exponent(e24: int) -> str:
    f = Fraction(e24, 24)
    return str(f.numerator) if f.denominator == 1 else f"({f})"


def coefficient(series: QSeries, n: int) -> int:
    """Coefficient of q^n in a classical series."""
    if not series.is_classical:
        raise SeriesFormError(f"leading exponent {series.offset24}/24 is fractional")
    k = n - series.offset24 // 24
    if not 0 <= k < len(series.coeffs):
        lo = series.offset24 // 24
        raise SeriesRangeError(f"q^{n} outside known range [{lo}, {lo + len(series.coeffs)})")
    return series.coeffs[k]


@dataclass(frozen=True)
class EtaQuotient:
    """A product of eta(delta*tau)^exponent over distinct deltas."""

    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        factors = tuple((int(d), int(m)) for d, m in self.factors)
        deltas = [d for d, _ in factors]
        if not factors:
            raise ValueError("empty eta quotient")
        if any(d < 1 for d in deltas):
            raise ValueError("deltas must be positive")
        if any(b <= a for a, b in zip(deltas, deltas[1:])):
            raise ValueError("deltas must be strictly increasing")
        object.__setattr__(self, "factors", factors)

    @property
    def weight(self) -> Fraction:
        return Fraction(sum(m for _, m in self.factors), 2)

    @property
    def offset24(self) -> int:
        return sum(d * m for d, m in self.factors)

    @classmethod
    def parse(cls, text: str) -> "EtaQuotient":
        """Parse ``"delta:exponent[,delta:exponent]*"``, e.g. ``"1:3,7:3"``."""
        pairs = []
        for chunk in text.split(","):
            parts = chunk.strip().split(":")
            if len(parts) != 2:
                raise EtaParseError(f"bad factor {chunk!r}; expected delta:exponent")
            try:
                pairs.append((int(parts[0]), int(parts[1])))
            except ValueError:
                raise EtaParseError(f"bad factor {chunk!r}; expected integers") from None
        try:
            return cls(tuple(pairs))
        except ValueError as exc:
            raise EtaParseError(str(exc)) from None

    def __str__(self) -> str:
        return ",".join(f"{d}:{m}" for d, m in self.factors)


G3 = EtaQuotient(((1, 3), (7, 3)))
G2_B = EtaQuotient(((1, 1), (2, 1), (7, 1), (14, 1)))
U_HAUPTMODUL = EtaQuotient(((1, -24), (2, 24)))
R_HAUPTMODUL = EtaQuotient(((1, -4), (7, 4)))

# Ascending coefficient lists, (numerator, denominator).
PHI4 = ([1, 768, 196608, 16777216], [0, 1])


def _poly_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _phi3_numerator() -> list[int]:
    quad = [1, 7**2 * 5, 7**4]
    num = [1]
    for _ in range(3):
        num = _poly_mul(num, quad)
    return _poly_mul(num, [1, 13, 49])


PHI3 = (_phi3_numerator(), [0, 1])


def euler_product(delta: int, n_terms: int) -> list[int]:
    """Coefficients of prod_{n>=1} (1 - q^(n*delta)) up to q^(n_terms-1).

    Uses the pentagonal number theorem: the product equals
    sum_k (-1)^k q^(delta*k(3k-1)/2) over all integers k.
    """
    out = [0] * n_terms
    out[0] = 1
    k = 1
    while True:
        sign = -1 if k % 2 else 1
        e1 = delta * k * (3 * k - 1) // 2
        e2 = delta * k * (3 * k + 1) // 2
        if e1 >= n_terms:
            break
        out[e1] += sign
        if e2 < n_terms:
            out[e2] += sign
        k += 1
    return out


def eta_quotient_expand(quotient: EtaQuotient, n_terms: int) -> QSeries:
    """Expand an eta quotient to ``n_terms`` coefficients from its leading term."""
    if n_terms < 1:
        raise ValueError("n_terms must be at least 1")
    result = QSeries.constant(1, n_terms)
    for delta, m in quotient.factors:
        base = QSeries(0, euler_product(delta, n_terms))
        if m > 0:
            result = result * base**m
        elif m < 0:
            result = result * base.inverse() ** (-m)
    return QSeries(quotient.offset24, result.coeffs)


def _sigma3_table(n: int) -> list[int]:
    sig = [0] * n
    for d in range(1, n):
        d3 = d**3
        for m in range(d, n, d):
            sig[m] += d3
    return sig


def eisenstein_e4(n_terms: int) -> QSeries:
    sig = _sigma3_table(n_terms)
    return QSeries(0, [1] + [240 * s for s in sig[1:]])


def j_expansion(n_terms: int) -> QSeries:
    """The j-function q^-1 + 744 + 196884 q + ... as E4^3 / Delta."""
    if n_terms < 1:
        raise ValueError("n_terms must be at least 1")
    delta = eta_quotient_expand(EtaQuotient(((1, 24),)), n_terms)
    return eisenstein_e4(n_terms) ** 3 / delta


def poly_of_series(coeffs: Sequence[int], series: QSeries) -> QSeries:
    """Evaluate an integer polynomial (ascending coefficients) at a series."""
    if not any(coeffs):
        raise ValueError("zero polynomial")
    n = len(series.coeffs) + max(0, series.offset24 // 24) * (len(coeffs) - 1)
    acc = None
    for c in reversed(coeffs):
        if acc is None:
            acc = QSeries.constant(c, n)
            continue
        acc = acc * series
        if c:
            acc = acc + QSeries.constant(c, n)
    return acc


def verify_hauptmodul_identity(
    numerator_coeffs: Sequence[int],
    denominator_coeffs: Sequence[int],
    input: QSeries,
    target: QSeries,
    n_terms: int,
) -> bool:
    """Check numerator(input)/denominator(input) == target through n_terms coefficients.

    Comparison starts at the leading exponent of ``target``.  Raises
    :class:`SeriesRangeError` if either side is not known far enough.
    """
    quotient = poly_of_series(numerator_coeffs, input) / poly_of_series(denominator_coeffs, input)
    start = target.valuation
    lhs = quotient.coefficients_from(start, n_terms)
    rhs = target.coefficients_from(start, n_terms)
    return lhs == rhs


def hauptmodul_checks(n_terms: int) -> dict[str, bool]:
    """Run the phi_3 and phi_4 identities against j to ``n_terms`` coefficients."""
    # the quotients lose a few leading terms to division by the hauptmodul
    extra = 10
    j = j_expansion(n_terms)
    u = eta_quotient_expand(U_HAUPTMODUL, n_terms + extra)
    r = eta_quotient_expand(R_HAUPTMODUL, n_terms + extra)
    return {
        "phi4": verify_hauptmodul_identity(*PHI4, u, j, n_terms),
        "phi3": verify_hauptmodul_identity(*PHI3, r, j, n_terms),
    }


def sparse_terms(series: QSeries) -> Iterable[tuple[Fraction, int]]:
    for k, c in enumerate(series.coeffs):
        if c:
            yield Fraction(series.offset24 + 24 * k, 24), c
