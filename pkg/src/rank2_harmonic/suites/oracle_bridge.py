"""
The finite local-field model against the discrete rank-1 spaces: the
coinvariant square, the Fourier formulas on :math:`\\mathbb{F}_p((u))`, the
images of the Dirac delta and the Haar measure and the layer diagram.
"""
from fractions import Fraction

from ..oracle import (
    FiniteFunction, TruncatedLaurent, dist_images, fourier_local, fourier_local_literal, haar_integral,
    haar_shell_masses, i_map, invariant_functions, j_map, layer_diagram_check, psi
)
from ..rank1 import delta_geq, delta_plus_infinity, s_map, translate
from ..report import Suite, attempt, check
from ..scalar import CyclotomicScalar
from ..value_group import GammaElement

# Residue characteristics and window radius of the bridge
PRIMES = (2, 3)
WINDOW = 3
# Valuations of omega
OMEGA_BOUND = 2
LAYER_FIBERS = range(-2, 3)
LAYER_GAMMAS = (GammaElement(0, 1), GammaElement(1, 0), GammaElement(-1, 2))


def _random_function(rng, p, M, n, m):
    return FiniteFunction(p, M, n, m, tuple(int(v) for v in rng.integers(-2, 3, size=p ** (m - n))))


def field_checks(p, M):
    """Character orthogonality, Haar normalization and the Fourier formula on indicators"""
    total = CyclotomicScalar.rational(p, 0)
    for x in range(p):
        total = total + psi(p, x)
    checks = [check(f'p={p}: characters sum to zero', total.is_zero, {'sum': str(total)})]

    masses = haar_shell_masses(p, M)
    checks.append(attempt(f'p={p}: mu(O_L) = 1',
                          lambda: haar_integral(FiniteFunction.indicator(p, M, 0)).to_rational() == 1))
    checks.append(attempt(f'p={p}: mu(m^1) = 1/p',
                          lambda: haar_integral(FiniteFunction.indicator(p, M, 1)).to_rational() == Fraction(1, p)))
    checks.append(check(f'p={p}: mu(O*(0)) = 1 - 1/p', masses[0] == 1 - Fraction(1, p), {'mass': str(masses[0])}))

    for n in range(-OMEGA_BOUND, OMEGA_BOUND + 1):
        for v in range(-OMEGA_BOUND, OMEGA_BOUND + 1):
            if abs(n + v) > M:
                continue
            expected = FiniteFunction.indicator(p, M, -n - v).scale(Fraction(p) ** -n)
            checks.append(attempt(f'p={p}: F(delta m^{n}) with v={v}',
                                  lambda: fourier_local(FiniteFunction.indicator(p, M, n), v) == expected))
    return checks


def inversion_checks(rng, p, M, count):
    checks = []
    bound = min(OMEGA_BOUND, M - 1)
    for i in range(count):
        f = _random_function(rng, p, M, -1, 1)
        for v in range(-bound, bound + 1):
            checks.append(attempt(f'p={p} f{i}: F F f = p^{v} f(-x)',
                                  lambda: fourier_local(fourier_local(f, v), v) == f.reflect().scale(Fraction(p) ** v),
                                  {'f': str(f), 'v': v}))
        v = int(rng.integers(-1, 2))
        checks.append(attempt(f'p={p} f{i}: residue matrix agrees with the literal pairing',
                              lambda: fourier_local(f, v) == fourier_local_literal(f, v), {'f': str(f), 'v': v}))
    return checks


def coinvariant_checks(rng, p, M, count):
    """The square i = j on invariants, both maps on indicators and orbit cancellation"""
    checks = []
    for n in range(-M, M + 1):
        f = FiniteFunction.indicator(p, M, n)
        checks.append(attempt(f'p={p}: i(delta m^{n}) = j(delta m^{n}) = delta_geq({n})',
                              lambda: i_map(f) == j_map(f) == delta_geq(n)))

    for n, m in ((-1, 1), (0, 2)):
        for j, f in enumerate(invariant_functions(p, M, n, m)):
            checks.append(attempt(f'p={p}: i = j on invariant {j} of ({n}, {m})',
                                  lambda: i_map(f) == j_map(f), {'f': str(f)}))

    units = [TruncatedLaurent.from_dict(p, M, {0: 1, 1: 1})]
    if p > 2:
        units.append(TruncatedLaurent.from_dict(p, M, {0: 2}))
    for i in range(count):
        f = _random_function(rng, p, M, -1, 1)
        for unit in units:
            checks.append(attempt(f'p={p} f{i}: j(f - f(eps x)) = 0 for eps = {unit}',
                                  lambda: j_map(f - f.scale_by_unit(unit)).is_zero, {'f': str(f)}))
        checks.append(attempt(f'p={p} f{i}: u-translation shifts coinvariants by one',
                              lambda: j_map(f.u_translate()) == translate(j_map(f), 1), {'f': str(f)}))
    return checks


def distribution_checks(p, M):
    haar = dist_images('haar', p, M)
    masses = haar_shell_masses(p, M)
    return [
        check(f'p={p}: delta_0 -> delta_plus_infinity', dist_images('delta0', p, M) == delta_plus_infinity(0)),
        check(f'p={p}: Haar -> g_r at r = p', haar == dist_images('g_q', p, M), {'haar': str(haar)}),
        check(f'p={p}: Haar off-diagonal is (1 - 1/p) p^-y',
              all(s_map(haar)(y) == masses[y] for y in range(-M, M)), {'masses': {y: str(v) for y, v in masses.items()}}),
        check(f'p={p}: u-translation scales the Haar image by p', translate(haar, 1) == haar.scale(p)),
    ]


def run(rng, size):
    count = max(1, size // 10)
    checks = []
    for p in PRIMES:
        checks.extend(field_checks(p, WINDOW))
        checks.extend(inversion_checks(rng, p, WINDOW, count))
        checks.extend(coinvariant_checks(rng, p, WINDOW, count))
        checks.extend(distribution_checks(p, WINDOW))
        for k in LAYER_FIBERS:
            for gamma in LAYER_GAMMAS:
                checks.extend(layer_diagram_check(k, gamma, p, WINDOW, rng))
    return checks

# Create suite
OracleBridge = Suite('oracle-bridge', 'The finite local-field model against the discrete spaces', run)
