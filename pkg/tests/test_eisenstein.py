from fractions import Fraction

import pytest

from doubleeis.eisenstein import (
    UnderdeterminedTruncationError,
    bernoulli,
    derived_eisenstein,
    divisor_power_sums,
    eisenstein_qexp,
    quasimodular_monomials,
    recognize_quasimodular,
)
from doubleeis.series import QSeries


def akiyama_tanigawa(n):
    """Independent Bernoulli oracle (first kind, B1 = -1/2)."""
    a = [Fraction(0)] * (n + 1)
    out = []
    for m in range(n + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
        out.append(a[0])
    # Akiyama-Tanigawa produces B1 = +1/2; flip to the first-kind convention
    if n >= 1:
        out[1] = -out[1]
    return out


def test_bernoulli_values():
    assert bernoulli(0) == 1
    assert bernoulli(1) == Fraction(-1, 2)
    assert bernoulli(2) == Fraction(1, 6)
    assert bernoulli(12) == Fraction(-691, 2730)
    for k in range(3, 21, 2):
        assert bernoulli(k) == 0


def test_bernoulli_against_independent_oracle():
    oracle = akiyama_tanigawa(20)
    for k in range(21):
        assert bernoulli(k) == oracle[k]


def brute_sigma(power, n):
    return sum(d**power for d in range(1, n + 1) if n % d == 0)


def test_divisor_sums_sieve():
    for power in (1, 3, 5):
        sieve = divisor_power_sums(power, 30)
        for n in range(1, 31):
            assert sieve[n] == brute_sigma(power, n)


def test_sigma_multiplicativity_spot():
    assert brute_sigma(3, 6) == brute_sigma(3, 2) * brute_sigma(3, 3)


def test_odd_weight_vanishes():
    assert not eisenstein_qexp(3, 10)
    assert not eisenstein_qexp(7, 10)


def test_g2_expansion():
    assert eisenstein_qexp(2, 4) == QSeries(
        [Fraction(-1, 24), 1, 3, 4, 7]
    )


def test_g4_expansion():
    assert eisenstein_qexp(4, 2) == QSeries(
        [Fraction(1, 1440), Fraction(1, 6), Fraction(3, 2)]
    )


def test_normalized_coefficients_are_divisor_sums():
    from math import factorial

    for k in (2, 4, 6, 8):
        g = eisenstein_qexp(k, 20)
        scaled = (g - g.coefficient(0)) * factorial(k - 1)
        for n in range(1, 21):
            c = scaled.coefficient(n)
            assert c.denominator == 1 and c >= 0
            assert c == brute_sigma(k - 1, n)


def test_derived_eisenstein():
    assert derived_eisenstein(2, 0, 8) == eisenstein_qexp(2, 8)
    assert derived_eisenstein(2, 1, 2) == QSeries([0, 1, 6])
    for k in (2, 4, 6):
        for m in (1, 2):
            assert derived_eisenstein(k, m, 6).coefficient(0) == 0


def test_monomial_enumeration():
    assert quasimodular_monomials(4) == [(0, 1, 0), (2, 0, 0)]
    assert all(2 * a + 4 * b + 6 * c == 12 for a, b, c in quasimodular_monomials(12))
    assert len(quasimodular_monomials(12)) == 7


def test_recognize_basis_element():
    g4 = eisenstein_qexp(4, 20)
    assert recognize_quasimodular(g4, 4) == {(0, 1, 0): 1}


def test_recognize_products():
    for k1 in (2, 4, 6):
        for k2 in (2, 4, 6):
            s = eisenstein_qexp(k1, 25) * eisenstein_qexp(k2, 25)
            combo = recognize_quasimodular(s, k1 + k2)
            a = (k1 == 2) + (k2 == 2)
            b = (k1 == 4) + (k2 == 4)
            c = (k1 == 6) + (k2 == 6)
            assert combo == {(a, b, c): 1}


def test_recognize_perturbed_tail_fails():
    g2 = eisenstein_qexp(2, 50)
    s = g2 + QSeries.monomial(1, 50, 50)
    assert recognize_quasimodular(s, 2) is None


def test_recognize_wrong_weight_fails():
    assert recognize_quasimodular(eisenstein_qexp(4, 20), 6) is None


def test_recognize_underdetermined_is_distinct():
    short = eisenstein_qexp(4, 0)  # one coefficient, two weight-4 monomials
    with pytest.raises(UnderdeterminedTruncationError):
        recognize_quasimodular(short, 4)


def test_recognize_odd_weight():
    assert recognize_quasimodular(QSeries.zero(10), 5) == {}
    assert recognize_quasimodular(eisenstein_qexp(2, 10), 5) is None


def test_recognize_zero_series():
    assert recognize_quasimodular(QSeries.zero(30), 8) == {}
