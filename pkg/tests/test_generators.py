import numpy as np

from rank2_harmonic.generators import (
    GAMMA_BOUND, K_BOUND, MAX_WIDTH, random_breve, random_gamma, random_hat, random_quad,
    random_rank2_distribution, random_rank2_function, random_staircase, random_tilde,
    random_y_combination
)
from rank2_harmonic.rank2 import BelowMode, check_matching, pair_raw
from rank2_harmonic.value_group import BreveElement, circ


def test_same_seed_same_elements():
    a, b = np.random.default_rng(7), np.random.default_rng(7)
    for _ in range(5):
        alpha = random_breve(a)
        assert alpha == random_breve(b)
        assert str(random_rank2_function(a, alpha)) == str(random_rank2_function(b, alpha))


def test_bounds(rng):
    for _ in range(50):
        g = random_gamma(rng)
        assert abs(g.n) <= GAMMA_BOUND and abs(g.p) <= GAMMA_BOUND
        assert isinstance(random_breve(rng), BreveElement)
        assert abs(random_breve(rng).n) <= K_BOUND
        assert all(abs(v) <= 3 for v in random_quad(rng))
        assert random_gamma(rng, n=0).n == 0
        random_staircase(rng)


def test_rank2_functions_are_valid(rng):
    for mode in (BelowMode.ZERO, BelowMode.STAIRCASE, None):
        for _ in range(10):
            alpha = random_breve(rng)
            Q = random_rank2_function(rng, alpha, mode)
            assert Q.alpha == alpha
            assert 1 <= len(Q.functions) <= MAX_WIDTH
            assert check_matching(alpha, Q.klo, Q.slots, Q.below_mode)
            if mode is BelowMode.ZERO:
                assert Q.below_mode is BelowMode.ZERO


def test_distributions_and_y(rng):
    for _ in range(10):
        alpha = random_breve(rng)
        S = random_rank2_distribution(rng, alpha)
        assert S.alpha == alpha
        assert all(g.k == k for k, g in S.terms)
        y = random_y_combination(rng, alpha)
        assert pair_raw(random_rank2_function(rng, alpha), y).is_zero


def test_group_elements(rng):
    for _ in range(10):
        alpha = random_breve(rng)
        x = random_tilde(rng, alpha)
        assert x.alpha == alpha and x.h.beta == circ(x.beta, alpha)
        g = random_hat(rng, alpha)
        assert g.alpha == alpha and abs(g.m) <= 2
