"""Exit criteria for the build.  Every check is an exact integer equality.

A pass/fail line per criterion is printed in the "acceptance criteria"
section of the pytest summary (see conftest.py).
"""

import io
import time

from kummer7.cli import main
from kummer7.curves import count_points, default_curve, p2_character_sum
from kummer7.fibration import (
    SINGULAR_POINTS,
    builtin_fibers,
    count_Y,
    discriminant_divisible_by_i1_cubic,
    discriminant_rational_roots,
    is_singular_point,
    p1_character_sum,
    singular_points_check,
    verify_model_identity,
)
from kummer7.finitefield import PrimeField, primes_between
from kummer7.kummer import (
    CountingTerms,
    count_kummer,
    count_X_prime_factored,
    count_X_prime_naive,
    good_prime_reason,
    hodge_numbers,
    ns_eigenspace_ranks,
    predicted_trace,
    sweep,
)
from kummer7.qseries import (
    G2_B,
    G3,
    PHI3,
    PHI4,
    R_HAUPTMODUL,
    U_HAUPTMODUL,
    coefficient,
    eta_quotient_expand,
    j_expansion,
    verify_hauptmodul_identity,
)


def good_primes(hi):
    e = default_curve()
    return [p for p in primes_between(5, hi) if good_prime_reason(p, e) is None]


def test_criterion_1_modularity_sweep():
    start = time.perf_counter()
    result = sweep(5, 97, default_curve(), method="factored")
    elapsed = time.perf_counter() - start
    assert [r.p for r in result.records] == good_primes(97)
    g3 = eta_quotient_expand(G3, 98)
    for rec in result.records:
        assert rec.n_counted == rec.n_predicted, rec.p
        assert rec.a_p_count == coefficient(g3, rec.p), rec.p
    assert result.mismatches == []
    assert elapsed < 10.0


def test_criterion_2_eta_coefficients():
    assert list(eta_quotient_expand(G3, 11).coeffs) == [1, -3, 0, 5, 0, 0, -7, -3, 9, 0, -6]
    assert list(eta_quotient_expand(G2_B, 8).coeffs) == [1, -1, -2, 1, 0, 2, 1, -1]


def _independent_x_prime(p):
    squares = {a * a % p for a in range(1, p)}

    def chi(v):
        v %= p
        return 0 if v == 0 else (1 if v in squares else -1)

    def p1(x, t):
        return (x**3 + (t**4 - 6 * t**3 + 3 * t**2 + 2 * t + 1) * x**2
                + 8 * t**2 * (t**3 - 2 * t**2 + 1) * x + 16 * t**4 * (t - 1) ** 2)

    return sum(chi(p1(x, t) * x2 * (x2 - 1) * (x2 + 1)) + 1
               for x in range(p) for x2 in range(p) for t in range(p))


def _independent_c5():
    return 5 + 1 - (1 + sum(1 for x in range(5) for y in range(5) if (y * y - x**3 + x) % 5 == 0))


def test_criterion_3_p5_worked_example():
    c5 = _independent_c5()
    assert c5 == -2
    assert _independent_x_prime(5) == 127
    for method in ("naive", "factored"):
        n, terms = count_kummer(PrimeField(5), default_curve(), 0, method)
        assert terms == CountingTerms(127, 55, 40, 38, 36, 2, 240)
        assert n == 816
    assert predicted_trace(5, 0, 0, c5) == 816


def test_criterion_4_hodge_eigenspaces():
    assert ns_eigenspace_ranks([1, 1, 1, 7, 7, 7], 20) == (11, 9)
    assert ns_eigenspace_ranks(builtin_fibers(), 20) == (11, 9)
    inv = hodge_numbers(11, 9, 8, 4)
    assert (inv.h11, inv.h12, inv.euler_X) == (20, 14, 12)
    assert inv.betti == (1, 0, 20, 30, 20, 0, 1)


def test_criterion_5_oracle_equivalence():
    e = default_curve()
    for p in good_primes(31):
        assert count_X_prime_naive(PrimeField(p), e) == count_X_prime_factored(PrimeField(p), e), p
    for p in good_primes(97):
        f = PrimeField(p).with_table()
        _, a_p = count_Y(f)
        assert p1_character_sum(f) == a_p + 1, p
        assert p2_character_sum(e, f) == -count_points(e, f).c_p, p


def test_criterion_6_symbolic_models():
    assert verify_model_identity()
    assert len(SINGULAR_POINTS) == 8
    assert all(is_singular_point(pt, fib) for pt, fib in SINGULAR_POINTS.values())
    assert singular_points_check()
    cfg = builtin_fibers()
    assert cfg.type_counts == {7: 3, 1: 3}
    assert cfg.total == 24
    assert [int(r) for r in discriminant_rational_roots()] == [0, 1]
    assert discriminant_divisible_by_i1_cubic()


def test_criterion_7_hauptmodul_identities():
    j = j_expansion(30)
    u = eta_quotient_expand(U_HAUPTMODUL, 40)
    r = eta_quotient_expand(R_HAUPTMODUL, 40)
    assert verify_hauptmodul_identity(*PHI4, u, j, 30)
    assert verify_hauptmodul_identity(*PHI3, r, j, 30)


def test_criterion_8_negative_override():
    out = io.StringIO()
    code = main(["verify", "--pmax", "97", "--override-bp", "11:1", "--no-timing"], out=out)
    rows = [ln.split(",") for ln in out.getvalue().splitlines() if ln and ln[0].isdigit()]
    mismatched = [row for row in rows if row[7] != "true" or row[8] != "true"]
    assert code == 1
    assert len(mismatched) == 1 and mismatched[0][0] == "11"
