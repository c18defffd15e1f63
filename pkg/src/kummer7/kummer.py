"""Hodge numbers of the Kummer threefold and the point-count verifier.

The threefold X is the resolved quotient of Y x E by the simultaneous
negation involution, where Y is the Gamma_1(7) elliptic modular surface and E
an elliptic curve with rational 2-torsion.  Two independent routes to #X(F_p)
are compared per prime:

* the Lefschetz prediction from the traces a_p (weight 3 form), b_p (the
  2-torsion curve B) and c_p (the curve E);
* a geometric count assembled from a Legendre-symbol sum over an affine model
  plus correction terms for the fibres at t = 0, 1, infinity, the points at
  infinity and the exceptional divisor.
"""

from __future__ import annotations

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple, Optional, Union

import numpy as np

from .curves import EllipticCurveQ, count_points, p2_character_sum
from .errors import BadPrime, InconsistentInput, TheoremConstraintViolated
from .fibration import FiberConfiguration, count_Y, p1_character_sum, p1_values, surface_bad_reason
from .finitefield import PrimeField, build_legendre_table, primes_between
from .qseries import G2_B, G3, QSeries, coefficient, eta_quotient_expand

log = logging.getLogger(__name__)

COHOMOLOGY_DIMENSIONS = (1, 0, 20, 30, 20, 0, 1)


# -- Hodge and eigenspace invariants ---------------------------------------


@dataclass(frozen=True)
class KummerInvariants:
    n_plus: int
    n_minus: int
    c_D: int
    g_D: int
    e_D: int
    h11: int
    h12: int
    euler_X: int

    def __post_init__(self):
        if self.e_D != 2 * self.c_D - 2 * self.g_D:
            raise TheoremConstraintViolated("e(D) must equal 2c(D) - 2g(D)")
        if 4 * (self.n_plus - self.n_minus) != self.e_D:
            raise TheoremConstraintViolated(
                f"n+ - n- = {self.n_plus - self.n_minus} but e(D)/4 = {Fraction(self.e_D, 4)}"
            )
        if self.h11 != self.n_plus + 1 + self.c_D or self.h12 != 1 + self.n_minus + self.g_D:
            raise TheoremConstraintViolated("Hodge numbers inconsistent with eigenspace ranks")
        if self.euler_X != 2 * (self.h11 - self.h12) or 2 * self.euler_X != 3 * self.e_D:
            raise TheoremConstraintViolated("Euler number inconsistent")

    @property
    def betti(self) -> tuple[int, ...]:
        return (1, 0, self.h11, 2 + 2 * self.h12, self.h11, 0, 1)


def _fiber_indices(fibers) -> list[int]:
    if isinstance(fibers, FiberConfiguration):
        return fibers.indices()
    return [int(n) for n in fibers]


def ns_eigenspace_ranks(fibers: Union[FiberConfiguration, Iterable[int]], rho: int) -> tuple[int, int]:
    """Ranks (n+, n-) of the +1 and -1 eigenspaces of the fibrewise negation on NS(Y).

    ``fibers`` is a fibre configuration or just the list of indices n of its
    I_n fibres.  Solves n+ - n- = 2 + #{even n > 1} and n+ + n- = rho.
    """
    indices = _fiber_indices(fibers)
    if rho < 2:
        raise InconsistentInput(f"rho={rho}; the fibre and zero section already give rank 2")
    if any(n < 1 for n in indices):
        raise InconsistentInput("fibre indices must be positive")
    diff = 2 + sum(1 for n in indices if n > 1 and n % 2 == 0)
    if (rho - diff) % 2:
        raise InconsistentInput(f"parity mismatch: rho={rho}, n+ - n- = {diff}")
    n_plus, n_minus = (rho + diff) // 2, (rho - diff) // 2
    if n_minus < 0:
        raise InconsistentInput(f"rho={rho} too small for n+ - n- = {diff}")
    return n_plus, n_minus


def fixed_locus_invariants(B_components: int, B_total_genus: int) -> tuple[int, int, int]:
    """(c(D), g(D), e(D)) for D = (O + B) x (four 2-torsion sections)."""
    if B_components < 1 or B_total_genus < 0:
        raise InconsistentInput("B needs at least one component and nonnegative genus")
    c_D = 4 * (1 + B_components)
    g_D = 4 * B_total_genus
    return c_D, g_D, 2 * c_D - 2 * g_D


def hodge_numbers(n_plus: int, n_minus: int, c_D: int, g_D: int) -> KummerInvariants:
    e_D = 2 * c_D - 2 * g_D
    if 4 * (n_plus - n_minus) != e_D:
        raise TheoremConstraintViolated(
            f"n+ - n- = {n_plus - n_minus} but e(D)/4 = {Fraction(e_D, 4)}"
        )
    h11 = n_plus + 1 + c_D
    h12 = 1 + n_minus + g_D
    return KummerInvariants(n_plus, n_minus, c_D, g_D, e_D, h11, h12, 2 * (h11 - h12))


def gamma1_7_invariants(rho: int = 20) -> KummerInvariants:
    """Invariants for Y(Gamma_1(7)) with B irreducible of genus 1."""
    from .fibration import builtin_fibers

    n_plus, n_minus = ns_eigenspace_ranks(builtin_fibers(), rho)
    c_D, g_D, _ = fixed_locus_invariants(1, 1)
    return hodge_numbers(n_plus, n_minus, c_D, g_D)


# -- Lefschetz prediction ---------------------------------------------------


def trace_table(p: int, a_p: int, b_p: int, c_p: int) -> tuple[int, ...]:
    """Frobenius traces on H^0 .. H^6 predicted from the modular forms."""
    return (1, 0, 20 * p, a_p * c_p + 9 * p * c_p + 4 * p * b_p, 20 * p * p, 0, p**3)


def predicted_trace(p: int, a_p: int, b_p: int, c_p: int) -> int:
    return p**3 + 20 * p * p - (a_p * c_p + 9 * p * c_p + 4 * p * b_p) + 20 * p + 1


# -- geometric count ---------------------------------------------------------


class CountingTerms(NamedTuple):
    x_prime: int      # affine model, Legendre sum
    x_inf: int        # points with x or x2 at infinity
    a: int            # A^1 x E, counted 6 times
    b_surf: int       # ruled surface from the middle component, counted 3 times
    c: int            # blown-up quotient of e_0 x E over t = infinity
    f: int            # node correction over t = 0, 1, counted twice
    v_minus_d: int    # exceptional divisor minus the fixed curve

    @property
    def total(self) -> int:
        return (self.x_prime + self.x_inf + 6 * self.a + 3 * self.b_surf
                + self.c + 2 * self.f + self.v_minus_d)


def good_prime_reason(p: int, curve: EllipticCurveQ) -> Optional[str]:
    """Why p is excluded from verification, or None if it is good."""
    reason = surface_bad_reason(p)
    if reason:
        return reason
    if 14 % p == 0:
        return "p divides 14, the conductor of B"
    bad = curve.bad_reduction_divisor(p)
    if bad:
        return f"E has bad reduction ({bad})"
    return None


def _check_good(field: PrimeField, curve: EllipticCurveQ) -> PrimeField:
    reason = good_prime_reason(field.p, curve)
    if reason:
        raise BadPrime(field.p, reason)
    return field if field.legendre_table is not None else build_legendre_table(field)


def count_X_prime_naive(field: PrimeField, curve: EllipticCurveQ) -> int:
    """sum over (x, x2, t) of chi(p1(x, t) * p2(x2)) + 1, without factoring the character."""
    field = _check_good(field, curve)
    p = field.p
    table = field.legendre_table
    xs = np.arange(p, dtype=np.int64)
    p2 = np.zeros(p, dtype=np.int64)
    for c in reversed(curve.p2_coefficients(p)):
        p2 = (p2 * xs + c) % p
    total = 0
    for t in range(p):
        row = p1_values(field, [t])[0]
        for v in row:
            total += int(table[(int(v) * p2) % p].sum(dtype=np.int64))
    return total + p**3


def count_X_prime_factored(field: PrimeField, curve: EllipticCurveQ) -> int:
    """#X' = S1 * S2 + p^3 using multiplicativity of the character."""
    field = _check_good(field, curve)
    return p1_character_sum(field) * p2_character_sum(curve, field) + field.p**3


def counting_terms(p: int, x_prime: int, b_p: int, c_p: int) -> CountingTerms:
    n_B = p + 1 - b_p  # points on the curve B, not the surface term
    a = p * (p - c_p + 1)
    return CountingTerms(
        x_prime=x_prime,
        x_inf=2 * p * p + p,
        a=a,
        b_surf=a + c_p,
        c=p * p + 2 * p + 1,
        f=-c_p,
        v_minus_d=4 * p * (n_B + p + 1),
    )


def count_kummer(field: PrimeField, curve: EllipticCurveQ, b_p: int,
                 method: str = "factored") -> tuple[int, CountingTerms]:
    if method == "factored":
        x_prime = count_X_prime_factored(field, curve)
    elif method == "naive":
        x_prime = count_X_prime_naive(field, curve)
    else:
        raise ValueError(f"unknown method {method!r}")
    c_p = count_points(curve, field).c_p
    terms = counting_terms(field.p, x_prime, b_p, c_p)
    return terms.total, terms


# -- per-prime verification --------------------------------------------------


@dataclass
class TraceRecord:
    p: int
    a_p_eta: int
    a_p_count: int
    b_p: int
    c_p: int
    terms: CountingTerms
    n_counted: int
    n_predicted: int
    match: bool
    a_match: bool
    elapsed: float = field(default=0.0, compare=False)

    def __post_init__(self):
        if self.n_counted != self.terms.total:
            raise ValueError("n_counted does not reassemble from its terms")

    def row(self) -> dict:
        """The report row, in report column order."""
        return {
            "p": self.p,
            "a_p_eta": self.a_p_eta,
            "a_p_count": self.a_p_count,
            "b_p": self.b_p,
            "c_p": self.c_p,
            "n_counted": self.n_counted,
            "n_predicted": self.n_predicted,
            "match": self.match,
            "a_match": self.a_match,
        }


def expand_forms(p_max: int) -> tuple[QSeries, QSeries]:
    """g3 and g2^B expanded far enough to read coefficients up to q^p_max."""
    return eta_quotient_expand(G3, p_max), eta_quotient_expand(G2_B, p_max)


def verify_prime(field: PrimeField, curve: EllipticCurveQ, g3: QSeries, g2B: QSeries,
                 method: str = "factored", b_override: Optional[int] = None) -> TraceRecord:
    """Compare the geometric count with the Lefschetz prediction at one prime.

    ``b_override`` replaces b_p on the prediction side only, so a wrong value
    must surface as a mismatch; it exists for negative testing.
    """
    start = time.perf_counter()
    field = _check_good(field, curve)
    p = field.p
    a_eta = coefficient(g3, p)
    b_eta = coefficient(g2B, p)
    b_p = b_eta if b_override is None else b_override
    _, a_count = count_Y(field)
    n_counted, terms = count_kummer(field, curve, b_eta, method)
    c_p = -terms.f
    n_predicted = predicted_trace(p, a_eta, b_p, c_p)
    return TraceRecord(
        p=p, a_p_eta=a_eta, a_p_count=a_count, b_p=b_p, c_p=c_p, terms=terms,
        n_counted=n_counted, n_predicted=n_predicted,
        match=n_counted == n_predicted, a_match=a_count == a_eta,
        elapsed=time.perf_counter() - start,
    )


@dataclass
class SweepResult:
    records: list[TraceRecord]
    skipped: list[tuple[int, str]]
    elapsed: float = 0.0

    @property
    def mismatches(self) -> list[TraceRecord]:
        return [r for r in self.records if not (r.match and r.a_match)]

    @property
    def ok(self) -> bool:
        return not self.mismatches


def sweep(p_min: int, p_max: int, curve: EllipticCurveQ, method: str = "factored",
          threads: Optional[int] = None, b_overrides: Optional[Mapping[int, int]] = None) -> SweepResult:
    """Verify every good prime in [p_min, p_max]; results in ascending p."""
    start = time.perf_counter()
    b_overrides = dict(b_overrides or {})
    g3, g2B = expand_forms(p_max + 1)
    good, skipped = [], []
    for p in primes_between(p_min, p_max):
        reason = good_prime_reason(p, curve)
        if reason:
            log.info("skipping p=%d: %s", p, reason)
            skipped.append((p, reason))
        else:
            good.append(p)

    def work(p):
        return verify_prime(PrimeField(p), curve, g3, g2B, method, b_overrides.get(p))

    if threads == 1 or len(good) <= 1:
        records = [work(p) for p in good]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            records = list(pool.map(work, good))
    records.sort(key=lambda r: r.p)
    return SweepResult(records, skipped, time.perf_counter() - start)
