from fractions import Fraction

import pytest

from fflab.circle import CountingProblem
from fflab.fields import FieldSpec
from fflab.forms import fermat_form
from fflab.laurent import LaurentElement
from fflab.weyl import (canonical_point, canonical_shape_report, check_shrink,
                        check_smallbox_chain, check_weyl, compare_pointwise,
                        count_M_v, count_N, count_N_eta, count_curly_N,
                        eta_from_arc, measure_flat_count, measure_pointwise)


def tail_alpha(prob, tail):
    return LaurentElement.from_tail(prob.spec, tail)


# -- frozen counter values (q = 5, d = 3, n = 2, e = 1) ----------------------------


def test_count_N_frozen_values(prob_n2):
    zero = tail_alpha(prob_n2, (0, 0, 0, 0))
    assert count_N(prob_n2, zero) == 390625          # all of the double box
    t_inv = tail_alpha(prob_n2, (1, 0, 0, 0))        # alpha = 1/t
    assert count_N(prob_n2, t_inv) == 50625
    t_inv2 = tail_alpha(prob_n2, (0, 1, 0, 0))       # alpha = 1/t^2
    assert count_N(prob_n2, t_inv2) == 4225


def test_count_M_v_frozen_values(prob_n2):
    t_inv2 = tail_alpha(prob_n2, (0, 1, 0, 0))
    assert count_M_v(prob_n2, t_inv2, 2) == 841
    assert count_M_v(prob_n2, t_inv2, 3) == 81


@pytest.mark.slow
def test_count_N_oracle_route(prob_n2):
    t_inv2 = tail_alpha(prob_n2, (0, 1, 0, 0))
    assert count_N(prob_n2, t_inv2, oracle=True) == 4225


def test_count_N_eta_boundary_values(prob_n2):
    alpha = tail_alpha(prob_n2, (0, 1, 0, 0))
    # eta = 1 reproduces the full counter
    assert count_N_eta(prob_n2, alpha, 1) == count_N(prob_n2, alpha)
    # eta = 0 leaves only the origin box; the count is positive
    assert count_N_eta(prob_n2, alpha, 0) >= 1


def test_curly_N_present(prob_n2):
    alpha = tail_alpha(prob_n2, (0, 1, 0, 0))
    assert count_curly_N(prob_n2, alpha) >= 1


# -- inequality checkers ------------------------------------------------------------


SAMPLE_TAILS = [(0, 0, 0, 0), (1, 0, 0, 0), (0, 1, 0, 0), (0, 2, 1, 3),
                (4, 0, 0, 1), (2, 2, 2, 2)]


@pytest.mark.parametrize("tail", SAMPLE_TAILS)
def test_weyl_inequality_samples(prob_n2, tail):
    rep = check_weyl(prob_n2, tail_alpha(prob_n2, tail))
    assert rep.passed, rep.details


@pytest.mark.parametrize("tail", SAMPLE_TAILS)
def test_smallbox_chain_samples(prob_n2, tail):
    rep = check_smallbox_chain(prob_n2, tail_alpha(prob_n2, tail))
    assert rep.passed, rep.details


@pytest.mark.parametrize("eta", [0, 1])
def test_shrink_samples(prob_n2, eta):
    for tail in SAMPLE_TAILS:
        rep = check_shrink(prob_n2, tail_alpha(prob_n2, tail), eta)
        assert rep.passed, rep.details


def test_shrink_rejects_bad_eta(prob_n2):
    alpha = tail_alpha(prob_n2, (0, 0, 0, 0))
    from fflab.errors import ConfigError
    with pytest.raises(ConfigError):
        check_shrink(prob_n2, alpha, Fraction(1, 2))   # parity hypothesis


# -- pointwise lemma instrumentation -------------------------------------------------


def test_generic_lemma_canonical_point(prob_n2):
    rep = canonical_shape_report(prob_n2, "generic", 2, None)
    assert rep.hypothesis_ok
    assert rep.sigma == 4
    assert rep.s_value.abs_squared() == 625          # |S| = 25 = q^2
    assert rep.ratio_float() == pytest.approx(0.04)  # q^-2


def test_deg_r_positive_lemma_canonical_point(prob_n2):
    rep = canonical_shape_report(prob_n2, "deg-r-positive", 2, None)
    assert rep.hypothesis_ok
    assert rep.sigma == Fraction(7, 2)
    assert rep.s_value.abs_squared() == 625
    assert rep.ratio_float() == pytest.approx(5.0 ** -1.5)


def test_deg_r_zero_lemma_canonical_point(prob_n2):
    rep = canonical_shape_report(prob_n2, "deg-r-zero", 0, 3)
    assert rep.hypothesis_ok
    assert rep.sigma == Fraction(7, 2)
    assert rep.s_value.abs_squared() == 625
    assert rep.ratio_float() == pytest.approx(5.0 ** -1.5)


def test_hypothesis_failure_is_reported(prob_n2):
    rep = canonical_shape_report(prob_n2, "deg-r-positive", 0, None)
    assert not rep.hypothesis_ok
    assert rep.reason
    zero_rep = canonical_shape_report(prob_n2, "deg-r-zero", 2, None)
    assert not zero_rep.hypothesis_ok
    assert "r = 1" in zero_rep.reason
    with pytest.raises(ValueError):
        rep.ratio_float()


def test_cross_q_ratios_do_not_increase():
    probs = {}
    for q in (5, 7):
        spec = FieldSpec(q)
        probs[q] = CountingProblem(spec, fermat_form(spec, 2, 3), 1)
    for lemma, r_deg, beta in [("generic", 2, None),
                               ("deg-r-positive", 2, None),
                               ("deg-r-zero", 0, 3)]:
        rep5 = canonical_shape_report(probs[5], lemma, r_deg, beta)
        rep7 = canonical_shape_report(probs[7], lemma, r_deg, beta)
        # exact algebraic comparison: ratio at q=5 >= ratio at q=7
        assert compare_pointwise(rep5, rep7) == 1
        # the float route agrees
        assert rep5.ratio_float() >= rep7.ratio_float()


def test_eta_from_arc_values(prob_n2):
    # (e+1)eta for |r| = q^alpha_deg, |theta| = q^-beta
    assert eta_from_arc(prob_n2, 1, 4) >= 0
    with pytest.raises(Exception):
        eta_from_arc(prob_n2, -1, 0)


def test_measure_pointwise_matches_canonical(prob_n2):
    arc, tail = canonical_point(prob_n2, 2, None)
    rep = measure_pointwise(prob_n2, arc, tail, "generic")
    assert rep.sigma == 4
    assert rep.s_value.abs_squared() == 625


def test_measure_flat_count_smoke(prob_n2):
    got = measure_flat_count(prob_n2, 1)
    assert isinstance(got, tuple) and len(got) >= 2
