from fractions import Fraction

import pytest

from fflab.errors import ConfigError, PrecisionError
from fflab.latgon import (FunctionFieldLattice, SpecialLatticePair,
                          check_cape, check_ratio_lemma, check_sandwich,
                          count_NaZ, diagonal_lattice, gamma_from_problem,
                          random_symmetric_gamma)
from fflab.laurent import LaurentElement
from fflab.polys import Polynomial


def _zero(spec):
    return LaurentElement.zero(spec)


def test_identity_lattice_counts(spec5):
    lat = diagonal_lattice(spec5, [0, 0])
    assert lat.count_points(1) == 25
    assert lat.count_points(0) == 1


def test_diagonal_pair_basics(spec5):
    pair = SpecialLatticePair(spec5, [[_zero(spec5)]], 2)     # gamma = 0, n = 1
    assert pair.m_lattice.count_points(0) == 25
    closed = pair.minima("M", convention="closed", method="reduce")
    assert closed.exponents == (-2, 2)
    enum = pair.minima("M", convention="closed", method="enumerate")
    assert enum.exponents == (-2, 2)
    opened = pair.minima("M", convention="open", method="reduce")
    assert opened.exponents == (-1, 3)
    assert pair.check_minima_symmetry("closed", "reduce").passed
    assert pair.check_minima_symmetry("open", "reduce").passed
    assert pair.check_duality().passed


def test_ratio_lemma_straddles_first_minimum(spec5):
    pair = SpecialLatticePair(spec5, [[_zero(spec5)]], 1)
    rep = check_ratio_lemma(pair, -1, 0)
    assert rep.passed
    det = rep.details
    assert (det["count1"], det["count2"]) == (1, 5)
    assert det["case"] == "straddles-first-minimum"
    assert det["ratio_matches_formula"] and det["counts_match_minima"]


def test_ratio_lemma_validates_z_order(spec5):
    pair = SpecialLatticePair(spec5, [[_zero(spec5)]], 1)
    with pytest.raises(ConfigError):
        check_ratio_lemma(pair, 0, -1)
    with pytest.raises(ConfigError):
        check_ratio_lemma(pair, -1, 1)


def test_count_NaZ_gamma_zero(spec5):
    assert count_NaZ(spec5, [[_zero(spec5)]], 1, 0) == 5
    # at a = m the skew box coincides with the pair lattice box
    for z, want in [(0, 25), (-1, 5), (-2, 1)]:
        assert count_NaZ(spec5, [[_zero(spec5)]], 2, z) == want


def test_sandwich_gamma_zero(spec5):
    for z in (0, -1):
        for a in (1, 2, Fraction(3, 2)):
            rep = check_sandwich(spec5, [[_zero(spec5)]], a, z)
            assert rep.passed, rep.details


def test_sandwich_needs_a_at_least_one(spec5):
    with pytest.raises(ConfigError):
        check_sandwich(spec5, [[_zero(spec5)]], Fraction(1, 2), 0)


def test_seeded_suite_profiles_frozen(spec5):
    histogram = {}
    for seed in range(100):
        m = 1 + (seed % 2)
        gamma = random_symmetric_gamma(spec5, 2, seed)
        pair = SpecialLatticePair(spec5, gamma, m)
        assert pair.check_duality().passed
        assert pair.check_minima_symmetry("closed", "reduce").passed
        assert pair.check_minima_symmetry("open", "reduce").passed
        prof = pair.minima("M", convention="closed", method="reduce")
        enum = pair.minima("M", convention="closed", method="enumerate")
        assert prof.exponents == enum.exponents
        key = prof.exponents
        histogram[key] = histogram.get(key, 0) + 1
    assert histogram == {(0, 0, 0, 0): 81, (-1, 0, 0, 1): 18,
                         (-1, -1, 1, 1): 1}


def test_seeded_ratio_and_cape_suite(spec5):
    for seed in range(25):
        m = 1 + (seed % 2)
        gamma = random_symmetric_gamma(spec5, 2, seed)
        pair = SpecialLatticePair(spec5, gamma, m)
        for z1, z2 in [(-1, 0), (-2, 0), (-2, -1), (0, 0)]:
            assert check_ratio_lemma(pair, z1, z2).passed
        a = m + Fraction(seed % 2, 2)
        for z1, z2 in [(-1, 0), (-2, -1)]:
            assert check_cape(spec5, gamma, a, z1, z2).passed
        for z in (0, -1):
            assert check_sandwich(spec5, gamma, a, z).passed


def test_problem_gamma_cape_instance(prob_n2, spec5):
    alpha = LaurentElement.from_tail(spec5, (0, 2, 1, 3))
    fixed = [[Polynomial.from_ints(spec5, [1, 2]), Polynomial.gen(spec5)]]
    gamma = gamma_from_problem(prob_n2, alpha, fixed)
    rep = check_cape(spec5, gamma, 2, -1, 0)
    assert rep.passed
    det = rep.details
    assert det["K"] == -1
    assert (det["count1"], det["count2"]) == (1, 5)
    assert det["bound_exponent"] == -2
    assert check_sandwich(spec5, gamma, 2, -1).passed


def test_gamma_must_be_symmetric(spec5):
    t = LaurentElement.monomial(spec5, 1)
    zero = LaurentElement.zero(spec5)
    one = LaurentElement.monomial(spec5, 0)
    with pytest.raises(ConfigError):
        SpecialLatticePair(spec5, [[zero, t], [one, zero]], 1)


def test_singular_generator_rejected(spec5):
    one = LaurentElement.monomial(spec5, 0)
    with pytest.raises(ConfigError):
        FunctionFieldLattice(spec5, [[one, one], [one, one]])


def test_windowed_singularity_is_a_precision_error(spec5):
    windowed = LaurentElement.zero(spec5, floor=-3)
    with pytest.raises(PrecisionError):
        FunctionFieldLattice(spec5, [[windowed]])


def test_count_NaZ_below_window_is_a_precision_error(spec5):
    # a gamma entry truncated at t^-3 cannot certify a box that reads
    # coefficients at t^-5
    g = LaurentElement(spec5, {-1: 2}, floor=-3)
    assert count_NaZ(spec5, [[g]], 2, 0) >= 1
    with pytest.raises(PrecisionError):
        count_NaZ(spec5, [[g]], 3, 0)


def test_nonsquare_matrix_rejected(spec5):
    one = LaurentElement.monomial(spec5, 0)
    with pytest.raises(ConfigError):
        FunctionFieldLattice(spec5, [[one, one]])
