"""
Fourier transforms: involution on both rank-2 spaces, conjugacy under the
pairing, the fiber identities and the transforms of the canonical
distributions.
"""
from ..fourier import eta_inverse, fourier, fourier_fiber_dist, fourier_fiber_fn
from ..generators import (
    K_BOUND, random_breve, random_gamma, random_rank1_distribution, random_rank1_function,
    random_rank2_distribution, random_rank2_function, random_scalar
)
from ..rank1 import delta_plus_infinity, eta_distribution
from ..rank2 import delta_gamma, pair_rank2
from ..report import Suite, attempt
from ..torsor import base_measure, fiber_measure, mu_perp
from ..value_group import perp


def _fiber_checks(rng, i):
    k = int(rng.integers(-K_BOUND, K_BOUND + 1))
    gamma = random_gamma(rng)
    eta = fiber_measure(k, random_scalar(rng))
    inv = eta_inverse(eta, gamma)
    kp = -k - gamma.n
    f = random_rank1_function(rng, k)
    a = random_rank1_distribution(rng, kp)
    w = {'k': k, 'gamma': str(gamma), 'eta': str(eta)}
    return [
        attempt(f'fiber {i}: F(delta_plus_infinity) = eta',
                lambda: fourier_fiber_dist(delta_plus_infinity(kp), gamma, eta) == eta_distribution(eta), w),
        attempt(f'fiber {i}: F(eta^-1) = delta_plus_infinity',
                lambda: fourier_fiber_dist(eta_distribution(inv), gamma, eta) == delta_plus_infinity(k), w),
        attempt(f'fiber {i}: F_eta^-1 F_eta = id on functions',
                lambda: fourier_fiber_fn(fourier_fiber_fn(f, gamma, eta), gamma, inv) == f,
                {**w, 'f': str(f)}),
        attempt(f'fiber {i}: F_eta^-1 F_eta = id on distributions',
                lambda: fourier_fiber_dist(fourier_fiber_dist(a, gamma, eta), gamma, inv) == a,
                {**w, 'a': str(a)}),
    ]


def _delta_checks(rng, i):
    alpha, gamma0, gamma = random_breve(rng), random_breve(rng), random_gamma(rng)
    b = base_measure(alpha, gamma0, random_scalar(rng))
    w = {'alpha': str(alpha), 'gamma0': str(gamma0), 'gamma': str(gamma), 'b': str(b)}
    return [attempt(
        f'delta {i}: F(delta_(gamma0, b)) = delta_(gamma0^perp, perp(b))',
        lambda: fourier(delta_gamma(gamma0, b, alpha), gamma)
        == delta_gamma(perp(gamma0, gamma), mu_perp(b, gamma), perp(alpha, gamma)),
        w
    )]


def run(rng, size):
    """
    Run `size` randomized rounds.

    Parameters
    ----------
    rng : np.random.Generator
        The seeded generator
    size : int
        The number of rounds

    Returns
    -------
    checks : list(:py:class:`rank2_harmonic.report.Check`)
        Eight checks per round
    """
    checks = []
    for i in range(size):
        alpha, gamma = random_breve(rng), random_gamma(rng)
        Q = random_rank2_function(rng, alpha)
        S = random_rank2_distribution(rng, alpha)
        T = random_rank2_distribution(rng, perp(alpha, gamma))
        w = {'alpha': str(alpha), 'gamma': str(gamma)}

        checks.append(attempt(f'function {i}: F F = id', lambda: fourier(fourier(Q, gamma), gamma) == Q,
                              {**w, 'Q': str(Q)}))
        checks.append(attempt(f'distribution {i}: F F = id', lambda: fourier(fourier(S, gamma), gamma) == S,
                              {**w, 'S': str(S)}))
        checks.append(attempt(f'conjugacy {i}: <F Q, S> = <Q, F S>',
                              lambda: pair_rank2(fourier(Q, gamma), T) == pair_rank2(Q, fourier(T, gamma)),
                              {**w, 'Q': str(Q), 'S': str(T)}))
        checks.extend(_fiber_checks(rng, i))
        checks.extend(_delta_checks(rng, i))
    return checks

# Create suite
FourierInvolution = Suite('fourier-involution', 'F_gamma F_gamma = id, conjugacy and fiber identities', run)
