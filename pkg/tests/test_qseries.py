from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kummer7.errors import EtaParseError, SeriesDivisionError, SeriesFormError, SeriesRangeError
from kummer7.qseries import (
    G2_B,
    G3,
    PHI3,
    PHI4,
    R_HAUPTMODUL,
    U_HAUPTMODUL,
    EtaQuotient,
    QSeries,
    coefficient,
    eta_quotient_expand,
    euler_product,
    hauptmodul_checks,
    j_expansion,
    verify_hauptmodul_identity,
)


def naive_product(factors, n):
    """prod over delta of prod_{k>=1} (1 - q^(k*delta))^m, by repeated truncated multiplication."""
    c = [1] + [0] * (n - 1)
    for delta, m in factors:
        for _ in range(m):
            k = 1
            while k * delta < n:
                nxt = c[:]
                for i in range(k * delta, n):
                    nxt[i] -= c[i - k * delta]
                c = nxt
                k += 1
    return c


def naive_divide(num, den, n):
    """Power series long division with den[0] == 1."""
    out = []
    rem = list(num[:n])
    for i in range(n):
        out.append(rem[i])
        for j in range(i, n):
            if j - i < len(den):
                rem[j] -= out[i] * den[j - i]
    return out


class TestEtaExpansion:
    def test_g3(self):
        s = eta_quotient_expand(EtaQuotient(((1, 3), (7, 3))), 11)
        assert s.offset24 == 24
        assert list(s.coeffs) == [1, -3, 0, 5, 0, 0, -7, -3, 9, 0, -6]

    def test_g2_b(self):
        s = eta_quotient_expand(G2_B, 8)
        assert list(s.coeffs) == [1, -1, -2, 1, 0, 2, 1, -1]

    def test_delta(self):
        s = eta_quotient_expand(EtaQuotient(((1, 24),)), 3)
        assert s.offset24 == 24
        assert list(s.coeffs) == naive_product([(1, 24)], 3) == [1, -24, 252]

    def test_zero_terms_rejected(self):
        with pytest.raises(ValueError):
            eta_quotient_expand(G3, 0)

    @pytest.mark.parametrize("factors", [[(1, 3), (7, 3)], [(1, 1), (2, 1), (7, 1), (14, 1)], [(1, 24)], [(2, 5), (3, 2)]])
    def test_against_naive_product(self, factors):
        n = 40
        s = eta_quotient_expand(EtaQuotient(tuple(factors)), n)
        assert list(s.coeffs) == naive_product(factors, n)

    def test_pentagonal(self):
        assert euler_product(1, 30) == naive_product([(1, 1)], 30)
        assert euler_product(3, 30) == naive_product([(3, 1)], 30)

    def test_weights_and_offsets(self):
        assert G3.weight == 3 and G3.offset24 == 24
        assert G2_B.weight == 2 and G2_B.offset24 == 24
        assert U_HAUPTMODUL.offset24 == 24 and R_HAUPTMODUL.offset24 == 24

    def test_negative_exponents(self):
        # eta(7t)^4 / eta(t)^4 times eta(t)^4 gives back eta(7t)^4
        n = 30
        r = eta_quotient_expand(R_HAUPTMODUL, n)
        back = r * QSeries(0, naive_product([(1, 4)], n))
        assert list(back.coeffs) == naive_product([(7, 4)], n)

    def test_fractional_offset(self):
        s = eta_quotient_expand(EtaQuotient(((1, 1),)), 5)
        assert s.offset24 == 1 and not s.is_classical
        with pytest.raises(SeriesFormError):
            coefficient(s, 0)


class TestCoefficient:
    def test_values(self):
        g3 = eta_quotient_expand(G3, 20)
        g2b = eta_quotient_expand(G2_B, 20)
        assert coefficient(g3, 2) == -3
        assert coefficient(g3, 1) == 1
        assert coefficient(g2b, 5) == 0
        assert all(coefficient(g3, n) == 0 for n in (3, 5, 6, 10))

    def test_range(self):
        g3 = eta_quotient_expand(G3, 11)
        with pytest.raises(SeriesRangeError):
            coefficient(g3, 12)
        with pytest.raises(SeriesRangeError):
            coefficient(g3, 0)


class TestParse:
    def test_roundtrip(self):
        q = EtaQuotient.parse("1:3,7:3")
        assert q == G3 and str(q) == "1:3,7:3"

    @pytest.mark.parametrize("text", ["", "1", "1:a", "7:3,1:3", "0:1", "1:2:3"])
    def test_bad(self, text):
        with pytest.raises(EtaParseError):
            EtaQuotient.parse(text)


class TestJ:
    def test_leading_terms(self):
        assert j_expansion(1).offset24 == -24
        assert list(j_expansion(1).coeffs) == [1]
        assert list(j_expansion(2).coeffs) == [1, 744]
        assert list(j_expansion(3).coeffs) == [1, 744, 196884]

    def test_against_long_division(self):
        n = 25
        e4 = [1] + [240 * sum(d**3 for d in range(1, k + 1) if k % d == 0) for k in range(1, n)]
        e4_cubed = naive_product([], n)
        for _ in range(3):
            e4_cubed = [sum(e4_cubed[i] * e4[k - i] for i in range(k + 1)) for k in range(n)]
        delta_over_q = naive_product([(1, 24)], n)
        expected = naive_divide(e4_cubed, delta_over_q, n)
        j = j_expansion(n)
        assert list(j.coeffs) == expected
        assert max(abs(c) for c in j.coeffs) > 2**63


class TestHauptmodul:
    def test_phi4(self):
        u = eta_quotient_expand(U_HAUPTMODUL, 40)
        assert verify_hauptmodul_identity(*PHI4, u, j_expansion(30), 30)

    def test_phi3(self):
        r = eta_quotient_expand(R_HAUPTMODUL, 40)
        assert verify_hauptmodul_identity(*PHI3, r, j_expansion(30), 30)

    def test_phi3_numerator_expansion(self):
        sympy = pytest.importorskip("sympy")
        r = sympy.symbols("r")
        num = sympy.Poly(sympy.expand((7**4 * r**2 + 7**2 * 5 * r + 1) ** 3 * (49 * r**2 + 13 * r + 1)), r)
        assert list(reversed(num.all_coeffs())) == PHI3[0]

    def test_perturbed(self):
        u = eta_quotient_expand(U_HAUPTMODUL, 15)
        num = [1, 3 * 255, 3 * 255**2, 255**3]
        assert not verify_hauptmodul_identity(num, [0, 1], u, j_expansion(5), 5)

    def test_checks_helper(self):
        assert hauptmodul_checks(30) == {"phi4": True, "phi3": True}

    def test_non_unit_denominator(self):
        u = eta_quotient_expand(U_HAUPTMODUL, 10)
        with pytest.raises(SeriesDivisionError):
            verify_hauptmodul_identity([1], [0, 2], u, j_expansion(5), 5)

    def test_too_short(self):
        u = eta_quotient_expand(U_HAUPTMODUL, 5)
        with pytest.raises(SeriesRangeError):
            verify_hauptmodul_identity(*PHI4, u, j_expansion(30), 30)


series_st = st.builds(
    lambda off, cs: QSeries(24 * off, cs),
    st.integers(-2, 2),
    st.lists(st.integers(-50, 50), min_size=1, max_size=12),
)
unit_series_st = st.builds(
    lambda off, lead, cs: QSeries(24 * off, [lead] + cs),
    st.integers(-2, 2),
    st.sampled_from([1, -1]),
    st.lists(st.integers(-50, 50), max_size=11),
)


class TestArithmeticProperties:
    @given(series_st, series_st)
    def test_mul_commutes(self, a, b):
        assert a * b == b * a

    @given(series_st, series_st, series_st)
    @settings(max_examples=50)
    def test_mul_associates(self, a, b, c):
        left, right = (a * b) * c, a * (b * c)
        n = min(left.truncation, right.truncation)
        assert left.offset24 == right.offset24
        assert left.coeffs[:n] == right.coeffs[:n]

    @given(series_st, unit_series_st)
    def test_div_then_mul(self, a, b):
        back = (a / b) * b
        n = min(a.truncation, b.truncation)
        assert back.offset24 == a.offset24
        assert back.coeffs[:n] == a.coeffs[:n]

    @given(series_st, series_st)
    def test_add_commutes(self, a, b):
        assert a + b == b + a

    def test_delta_direct_power(self):
        eta_over_q24 = QSeries(0, euler_product(1, 20))
        assert (eta_over_q24**24).coeffs == eta_quotient_expand(EtaQuotient(((1, 24),)), 20).coeffs

    def test_add_precision(self):
        a = QSeries(0, [1, 2, 3])           # 1 + 2q + 3q^2 + O(q^3)
        b = QSeries(24, [1])                # q + O(q^2)
        s = a + b
        assert s.coeffs == (1, 3) and s.precision24 == 48

    def test_fractional_add_rejected(self):
        with pytest.raises(SeriesFormError):
            QSeries(1, [1]) + QSeries(0, [1])

    def test_str(self):
        assert str(QSeries(24, [1, 0, -3])) == "1*q^1 + -3*q^3 + O(q^4)"
        assert "(1/24)" in str(QSeries(1, [1]))
