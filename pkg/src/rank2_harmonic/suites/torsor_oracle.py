"""
Closed-form torsor coordinates against literal signed counting of explicit
column sets.
"""
from ..generators import random_breve, random_gamma, random_staircase
from ..report import Suite, attempt, check
from ..torsor import (
    Staircase, Z0, c_shift, calcul_shift, columns, count_oracle, d_staircase, gamma_shift, kappa,
    perp_set, shear_set, staircase_set, torsor_compose, translate_set
)
from ..value_group import BreveElement, GammaElement, brute_force_perp, circ, perp, shear

# Exhaustive range of the closed form for the shear of full columns
CALCUL_SPAN = 8
CALCUL_SHEAR = 4
# Box of endpoints |n| <= PAIR_N, |p| <= PAIR_P (or p = -inf) checked exhaustively
PAIR_N = 2
PAIR_P = 3
# Largest finite region R_{alpha,beta} in the exhaustive range
MAX_REGION = 50
# Staircases and translations of the exhaustive checks
PAIR_STAIRCASES = (Z0, Staircase(1, 0), Staircase(0, 2, {1: -1}), Staircase(-1, 1, {0: 3}))
PAIR_SHIFT = 1


def calcul_checks():
    checks = []
    for n2 in range(-CALCUL_SPAN // 2, CALCUL_SPAN // 2 + 1):
        for n1 in range(n2, n2 + CALCUL_SPAN + 1):
            a, b = BreveElement.column(n1), BreveElement.column(n2)
            for m in range(-CALCUL_SHEAR, CALCUL_SHEAR + 1):
                literal = count_oracle(shear_set(staircase_set(Z0, a, b), -m), a, b)
                checks.append(check(f'calcul m={m} n1={n1} n2={n2}', calcul_shift(m, n1, n2) == literal,
                                    {'closed_form': calcul_shift(m, n1, n2), 'literal': literal}))
    return checks


def region_size(alpha, beta):
    """:math:`|R_{\\alpha,\\beta}|`, None when a column is unbounded"""
    size = 0
    for _, lo, hi in columns(alpha, beta):
        if lo is None or hi is None:
            return None
        size += hi - lo
    return size


def small_pairs(n_bound=PAIR_N, p_bound=PAIR_P, max_region=MAX_REGION):
    """Every pair alpha >= beta of the box whose finite region has at most max_region points"""
    points = [BreveElement.column(n) for n in range(-n_bound, n_bound + 1)]
    points += [BreveElement(n, p) for n in range(-n_bound, n_bound + 1) for p in range(-p_bound, p_bound + 1)]
    for a in points:
        for b in points:
            if a < b:
                continue
            size = region_size(a, b)
            if size is None or size <= max_region:
                yield a, b


def pair_checks():
    """Closed forms against counting on every small pair"""
    shifts = [GammaElement(x, y) for x in range(-PAIR_SHIFT, PAIR_SHIFT + 1)
              for y in range(-PAIR_SHIFT, PAIR_SHIFT + 1)]
    failures = {'staircase': [], 'gamma': [], 'perp': []}
    for a, b in small_pairs():
        for Z in PAIR_STAIRCASES:
            if d_staircase(Z, a, b).t != -count_oracle(staircase_set(Z, a, b), a, b):
                failures['staircase'].append([str(a), str(b), str(Z)])
        for g in shifts:
            literal = count_oracle(translate_set(staircase_set(Z0, circ(g, a), circ(g, b)), -g), a, b)
            if gamma_shift(g, a, b) != literal:
                failures['gamma'].append([str(a), str(b), str(g)])
            literal = count_oracle(perp_set(staircase_set(Z0, a, b), a, b, g), perp(b, g), perp(a, g))
            if kappa(a, b, g) != literal:
                failures['perp'].append([str(a), str(b), str(g)])
    return [check(f'exhaustive {name}: closed form = counting', not bad, {'failures': bad[:5]})
            for name, bad in failures.items()]


def _ordered(rng, n=2):
    return sorted((random_breve(rng) for _ in range(n)), reverse=True)


def run(rng, size):
    checks = calcul_checks() + pair_checks()
    for i in range(size):
        a, b, c = _ordered(rng, 3)
        Z = random_staircase(rng)
        beta_, gamma = random_gamma(rng), random_gamma(rng)
        m = int(rng.integers(-3, 4))
        w = {'alpha': str(a), 'beta': str(b), 'Z': str(Z)}

        checks.append(attempt(
            f'staircase {i}: d_Z normalizes Z',
            lambda: d_staircase(Z, a, b).t == -count_oracle(staircase_set(Z, a, b), a, b), w))
        checks.append(attempt(
            f'compose {i}: [a,b] x [b,c] -> [a,c]',
            lambda: torsor_compose(d_staircase(Z, a, b), d_staircase(Z, b, c)) == d_staircase(Z, a, c),
            {**w, 'third': str(c)}))
        checks.append(attempt(
            f'gamma action {i}: translation of sets',
            lambda: gamma_shift(beta_, a, b)
            == count_oracle(translate_set(staircase_set(Z0, circ(beta_, a), circ(beta_, b)), -beta_), a, b),
            {**w, 'translation': str(beta_)}))
        checks.append(attempt(
            f'c action {i}: shear of sets',
            lambda: c_shift(m, a, b)
            == count_oracle(shear_set(staircase_set(Z0, shear(m, a), shear(m, b)), -m), a, b),
            {**w, 'm': m}))
        checks.append(attempt(
            f'perp {i}: reflection of sets',
            lambda: kappa(a, b, gamma)
            == count_oracle(perp_set(staircase_set(Z0, a, b), a, b, gamma), perp(b, gamma), perp(a, gamma)),
            {**w, 'gamma': str(gamma)}))
        checks.append(attempt(
            f'perp {i}: closed form is the minimum',
            lambda: perp(a, gamma) == brute_force_perp(a, gamma), {**w, 'gamma': str(gamma)}))
    return checks

# Create suite
TorsorOracle = Suite('torsor-oracle', 'Torsor operations against literal set counting', run)
