"""
The pairing: invariance under both groups and under a change of base
point, soundness of the normal form modulo Y and non-degeneracy on
truncated windows.
"""
from ..generators import (
    random_breve, random_hat, random_measure, random_rank2_distribution, random_rank2_function,
    random_tilde, random_y_combination
)
from ..heisenberg import act
from ..rank2 import pair_rank2, pair_raw, reduce_normal_form, retarget_alpha, truncated_pairing_rank
from ..report import Suite, attempt, check
from ..torsor import mu_inverse

# Truncated windows -m <= k < m checked for non-degeneracy
TRUNCATED_WINDOWS = (1, 2, 3)


def _rank_checks():
    checks = []
    for m in TRUNCATED_WINDOWS:
        rank, dim = truncated_pairing_rank(m)
        checks.append(check(f'non-degenerate pairing on X_{m}', dim > 0 and rank == dim,
                            {'rank': rank, 'dim': dim}))
    return checks


def run(rng, size):
    checks = _rank_checks()
    for i in range(size):
        alpha = random_breve(rng)
        Q = random_rank2_function(rng, alpha)
        S = random_rank2_distribution(rng, alpha)
        x, g = random_tilde(rng, alpha), random_hat(rng, alpha)
        y = random_y_combination(rng, alpha)
        h = random_measure(rng, alpha, random_breve(rng))
        w = {'alpha': str(alpha), 'Q': str(Q), 'S': str(S)}

        checks.append(attempt(f'tilde {i}: <x Q, x S> = <Q, S>',
                              lambda: pair_rank2(act(x, Q), act(x, S)) == pair_rank2(Q, S), {**w, 'x': str(x)}))
        checks.append(attempt(f'hat {i}: <g Q, g S> = <Q, S>',
                              lambda: pair_rank2(act(g, Q), act(g, S)) == pair_rank2(Q, S), {**w, 'g': str(g)}))
        checks.append(attempt(f'retarget {i}: <Q h, h^-1 S> = <Q, S>',
                              lambda: pair_rank2(retarget_alpha(Q, h), retarget_alpha(S, mu_inverse(h)))
                              == pair_rank2(Q, S), {**w, 'h': str(h)}))
        checks.append(attempt(f'normal form {i}: reduce(S + y) = S',
                              lambda: reduce_normal_form(alpha, S.raw_terms + tuple(y)) == S, w))
        checks.append(attempt(f'well defined {i}: <Q, y> = 0', lambda: pair_raw(Q, y).is_zero, w))
    return checks

# Create suite
PairingInvariance = Suite('pairing-invariance', 'Invariance, normal forms and non-degeneracy of the pairing', run)
