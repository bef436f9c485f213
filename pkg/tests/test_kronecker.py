from fractions import Fraction

import pytest

from doubleeis.action import GroupRingElem, MATRICES, act_group_ring
from doubleeis.eisenstein import derived_eisenstein, eisenstein_qexp, recognize_quasimodular
from doubleeis.elements import EISENSTEIN, FormalElement, G1, G2, GP
from doubleeis.kronecker import (
    KroneckerRealization,
    beta_combination,
    build_b2,
    check_derivation_diagram,
    closed_form_depth2,
    fay_check,
    kronecker_b1,
    pair_product,
    polar_cross_terms,
    polar_product_candidate,
    realize_bernoulli,
    realize_element,
    realize_kronecker,
)
from doubleeis.multipoly import BiSeries, MultiPoly, RationalFunction4, divided_difference
from doubleeis.series import QSeries
from doubleeis.spaces import eisenstein_relations, enumerate_generators

M = MATRICES


def test_table_entries():
    t = kronecker_b1(6, 10)
    assert t.entry(1, 0) == eisenstein_qexp(2, 10)
    assert t.entry(2, 1) == derived_eisenstein(2, 1, 10) * Fraction(1, 2)
    assert not t.entry(1, 1)
    assert t.entry(0, 1) == eisenstein_qexp(2, 10)
    assert t.entry(0, 3) == derived_eisenstein(4, 0, 10) * 6  # |r-s|!/r! = 3!


def test_table_only_odd_entries():
    t = kronecker_b1(7, 5)
    assert all((r + s) % 2 == 1 for (r, s) in t.biseries._t)


def test_table_depth_one_consistency():
    # entry (k-1, d) with d <= k-1 is (k-d-1)!/(k-1)! (q d/dq)^d G_{k-d}
    from math import factorial

    t = kronecker_b1(9, 8)
    for k in range(1, 10):
        for d in range(min(k, 10 - k)):
            expected = derived_eisenstein(k - d, d, 8) * Fraction(
                factorial(k - d - 1), factorial(k - 1)
            ) if (k - d) % 2 == 0 else None
            if (k - 1 + d) % 2 == 1:
                assert t.entry(k - 1, d) == expected
            else:
                assert not t.entry(k - 1, d)


def test_q_derivative_equals_mixed_partial():
    # q d/dq of the table equals d/dX d/dY applied to it, entry by entry
    t = kronecker_b1(8, 10).biseries
    lhs = t.map_coefficients(lambda s: s.qderive()).truncate(6)
    rhs = t.partial_x().partial_y().truncate(6)
    assert lhs == rhs


def test_build_b2_requires_odd_table():
    bad = BiSeries({(1, 1): QSeries.constant(1, 4)}, 5)
    with pytest.raises(ValueError):
        build_b2(bad, 4, 4)


def test_build_b2_requires_degree_margin():
    t = kronecker_b1(4, 4)
    with pytest.raises(ValueError):
        build_b2(t, 4, 4)


def test_b2_solves_the_double_shuffle_system():
    n_order = 10
    table = kronecker_b1(7, n_order)
    b1 = table.biseries
    degree = 6
    b2 = build_b2(table, degree, n_order)
    p = pair_product(b1, degree)
    eps = GroupRingElem.matrix(M["epsilon"])
    t = GroupRingElem.matrix(M["T"])
    rstar = divided_difference(b1, "star").truncate(degree)
    rshuffle = divided_difference(b1, "shuffle").truncate(degree)
    assert p == act_group_ring(1 + eps, b2) + rstar
    assert p == act_group_ring(t * (1 + eps), b2) + rshuffle


def test_b2_zero_input():
    assert not build_b2(BiSeries.zero(None), 4, 4)


def test_b2_q_derivative_equals_pairing_operator():
    ctx = KroneckerRealization(8, 8)
    b2 = ctx.b2
    lhs = b2.map_coefficients(lambda s: s.qderive()).truncate(4)
    rhs = (b2.partial(0).partial(2) + b2.partial(1).partial(3)).truncate(4)
    assert lhs == rhs


def test_beta_correction_identities():
    # beta|(1+eps) = 3 R* + pol|(1 - T^-1 - T^-1 eps)
    # beta|T(1+eps) = 3 Rsh + pol|(1 - T - T eps)
    n_order = 8
    table = kronecker_b1(7, n_order)
    b1 = table.biseries
    degree = 5
    beta = beta_combination(b1, degree, n_order)
    pol = polar_cross_terms(b1, n_order)
    eps = GroupRingElem.matrix(M["epsilon"])
    t = GroupRingElem.matrix(M["T"])
    tinv = GroupRingElem.matrix(M["T"].inverse())
    rstar = divided_difference(b1, "star").truncate(degree)
    rshuffle = divided_difference(b1, "shuffle").truncate(degree)

    lhs = act_group_ring(1 + eps, beta)
    rhs_reg = rstar * 3
    rhs_pol = act_group_ring(1 - tinv - tinv * eps, pol)
    assert RationalFunction4.from_poly(lhs - rhs_reg) == rhs_pol

    lhs = act_group_ring(t * (1 + eps), beta)
    rhs_reg = rshuffle * 3
    rhs_pol = act_group_ring(1 - t - t * eps, pol)
    assert RationalFunction4.from_poly(lhs - rhs_reg) == rhs_pol


def test_polar_solution_of_the_system():
    # for a candidate in the bi-period space, a third of its (1 + T^-1) image
    # reproduces it under both symmetrizations
    p_tilde = polar_product_candidate(3)
    third = Fraction(1, 3)
    b2 = act_group_ring(1 + GroupRingElem.matrix(M["T"].inverse()), p_tilde) * third
    eps = GroupRingElem.matrix(M["epsilon"])
    t = GroupRingElem.matrix(M["T"])
    assert act_group_ring(1 + eps, b2) == p_tilde
    assert act_group_ring(t * (1 + eps), b2) == p_tilde


def test_fay_polar_only():
    assert fay_check(True, None, 8, 4)


def test_fay_kronecker():
    assert fay_check(True, kronecker_b1(6, 8), 6, 8)


def test_fay_perturbed_fails():
    bad = BiSeries({(1, 0): Fraction(1)}, None)
    assert not fay_check(True, bad, 6, 4)


def test_fay_regular_part_alone_fails():
    assert not fay_check(False, kronecker_b1(6, 6), 6, 6)


def test_realization_depth_one():
    assert realize_kronecker(G1(2, 0), 10) == eisenstein_qexp(2, 10)
    assert realize_kronecker(G1(1, 1), 10) == eisenstein_qexp(2, 10)
    assert not realize_kronecker(G1(1, 0), 10)
    assert realize_kronecker(G1(5, 1), 10) == derived_eisenstein(4, 1, 10) * Fraction(1, 4)


def test_realization_odd_weight_vanishes():
    ctx = KroneckerRealization(9, 5)
    for weight in (1, 3, 5, 7, 9):
        for gen in enumerate_generators(EISENSTEIN, weight):
            assert not ctx.value(gen)


def test_realization_products():
    g4 = eisenstein_qexp(4, 12)
    assert realize_kronecker(GP(4, 4, 0, 0), 12) == g4 * g4
    # odd-weight factors vanish: P(2,2;1,1) is a product of two weight-3 values
    assert not realize_kronecker(GP(2, 2, 1, 1), 12)
    assert realize_kronecker(GP(3, 3, 1, 1), 12) == derived_eisenstein(2, 1, 12) ** 2 * Fraction(1, 4)


def test_closed_form_matches_extraction_to_weight_eight():
    ctx = KroneckerRealization(8, 20)
    for k in range(2, 9, 2):
        for k1 in range(1, k):
            assert ctx.value(G2(k1, k - k1, 0, 0)) == closed_form_depth2(k1, k - k1, 20)


def test_closed_form_weight_two_special_case():
    assert closed_form_depth2(1, 1, 10) == eisenstein_qexp(2, 10) * Fraction(-1, 2)


def test_closed_form_rejects_odd_weight():
    with pytest.raises(ValueError):
        closed_form_depth2(1, 2, 5)


def test_realization_kills_relations_sample():
    ctx = KroneckerRealization(8, 15)
    for weight in (2, 4, 6, 8):
        for row in eisenstein_relations(weight):
            assert not ctx.element_value(row)


def test_realization_kills_odd_weight_relations_trivially():
    ctx = KroneckerRealization(7, 8)
    for row in eisenstein_relations(5):
        assert not ctx.element_value(row)


def test_stuffle_value_weight_four():
    # P(2,2;0,0) = 2 G(2,2;0,0) + G(4;0) forces the depth-two value
    g2 = eisenstein_qexp(2, 15)
    g4 = eisenstein_qexp(4, 15)
    assert realize_kronecker(G2(2, 2, 0, 0), 15) == (g2 * g2 - g4) * Fraction(1, 2)


def test_recognize_realized_depth_two(kron50):
    for k1, k2 in [(1, 1), (2, 2), (1, 3), (3, 5), (4, 6), (5, 7)]:
        series = kron50.value(G2(k1, k2, 0, 0)).truncate(30)
        assert recognize_quasimodular(series, k1 + k2) is not None


def test_recognize_weight_eight_eisenstein():
    series = realize_kronecker(G1(8, 0), 30)
    assert recognize_quasimodular(series, 8) == {(0, 2, 0): Fraction(6, 7)}


def test_bernoulli_realization_values():
    assert realize_bernoulli(G1(2, 0)) == Fraction(-1, 24)
    assert realize_bernoulli(G1(3, 0)) == 0
    assert realize_bernoulli(GP(4, 4, 0, 0)) == Fraction(1, 1440) ** 2
    assert realize_bernoulli(G1(4, 0)) == Fraction(1, 1440)


def test_derivation_diagram_small():
    assert check_derivation_diagram(2, 10)
    assert check_derivation_diagram(4, 10)


def test_derivation_diagram_weight_one():
    # realize(G(1;0)) = 0 and the image 1*G(2;1) realizes to q d/dq of it
    assert check_derivation_diagram(1, 10)


def test_realize_element_handles_zero():
    assert not realize_element(FormalElement.zero(), 5)


def test_context_weight_guard():
    ctx = KroneckerRealization(6, 5)
    with pytest.raises(ValueError):
        ctx.value(G1(8, 0))
    with pytest.raises(ValueError):
        ctx.value(G2(4, 4, 0, 0))


def test_realization_table_export():
    ctx = KroneckerRealization(4, 6)
    table = ctx.realization_table(2)
    rows = table.to_json_list()
    assert rows[0]["gen"] == "G(2;0)"
    assert rows[0]["provenance"] == "series-extraction"
    assert "O(q^7)" in rows[0]["value"]
