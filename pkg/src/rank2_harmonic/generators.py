"""
Seeded random elements over bounded windows, for the verification
suites and the tests. Every function takes a ``numpy.random.Generator``.
"""
from fractions import Fraction

from .heisenberg import HeisHat, HeisQuad, HeisTilde
from .rank1 import RankOneDistribution, RankOneFunction, delta_geq, g_r, pair_rank1
from .rank2 import BelowMode, dist_measure, make_rank2_function, reduce_normal_form, slot_measure, y_generator
from .scalar import ONE, RPARAM, ZERO, Scalar
from .torsor import Staircase, TorsorElement, base_measure
from .value_group import BreveElement, GammaElement, circ

# Fiber index bound |k|
K_BOUND = 4
# Fiber coordinate bound |p|
P_BOUND = 6
# Largest rank-2 window
MAX_WIDTH = 5
# Bound on the components of transform parameters
GAMMA_BOUND = 3

SCALAR_POOL = (
    ONE, -ONE, Scalar(2), Scalar(Fraction(1, 2)), Scalar(-3),
    RPARAM, RPARAM.inv(), ONE + RPARAM, Scalar(2) * RPARAM ** -2, RPARAM - Scalar(Fraction(1, 3)),
)

# Ratios of geometric tails
RATIO_POOL = (ONE, RPARAM, RPARAM.inv(), Scalar(2))


def _pick(rng, seq):
    return seq[int(rng.integers(len(seq)))]


def _int(rng, lo, hi):
    """Uniform integer in [lo, hi]"""
    return int(rng.integers(lo, hi + 1))


def random_scalar(rng, zero_prob=0.0):
    if zero_prob and rng.random() < zero_prob:
        return ZERO
    return _pick(rng, SCALAR_POOL)


def random_gamma(rng, bound=GAMMA_BOUND, n=None):
    """A point of Gamma with components in [-bound, bound], optionally with fixed projection n"""
    return GammaElement(_int(rng, -bound, bound) if n is None else n, _int(rng, -bound, bound))


def random_breve(rng, column_prob=1 / 3):
    n = _int(rng, -K_BOUND, K_BOUND)
    if rng.random() < column_prob:
        return BreveElement.column(n)
    return BreveElement(n, _int(rng, -P_BOUND, P_BOUND))


def random_staircase(rng, max_exceptions=2):
    exceptions = {_int(rng, -K_BOUND, K_BOUND): _int(rng, -P_BOUND, P_BOUND)
                  for _ in range(_int(rng, 0, max_exceptions))}
    return Staircase(_int(rng, -1, 1), _int(rng, -2, 2), exceptions)


def random_rank1_function(rng, k=0, tail=None):
    """A function with up to three explicit values; the tail is random unless given"""
    values = tuple(random_scalar(rng, zero_prob=0.2) for _ in range(_int(rng, 0, 3)))
    tail = random_scalar(rng, zero_prob=0.2) if tail is None else tail
    return RankOneFunction(k, _int(rng, -P_BOUND // 2, P_BOUND // 2), values, tail)


def _random_tail(rng):
    return tuple((_pick(rng, RATIO_POOL), random_scalar(rng)) for _ in range(_int(rng, 0, 2)))


def random_rank1_distribution(rng, k=0):
    xlo = _int(rng, -P_BOUND // 2, P_BOUND // 2)
    middle = tuple(random_scalar(rng, zero_prob=0.2) for _ in range(_int(rng, 0, 3)))
    return RankOneDistribution(k, xlo, _random_tail(rng), middle, xlo + len(middle) + 1, _random_tail(rng))


def random_measure(rng, alpha, beta):
    """A nonzero element of :math:`\\mu_r(\\alpha, \\beta)`"""
    return base_measure(alpha, beta, random_scalar(rng))


def _kill_lower_pairing(f, k):
    # Add d (delta_{>= p} - delta_{>= p+1}), which keeps the tail
    s = pair_rank1(f, g_r(k))
    if s.is_zero:
        return f
    p = f.base - 1
    step = delta_geq(p, k) - delta_geq(p + 1, k)
    return f + step.scale(-s / pair_rank1(step, g_r(k)))


def random_rank2_function(rng, alpha, below_mode=None):
    """
    A valid rank-2 function over alpha. Slots are drawn from the top of the
    window downwards, each tail chosen so that the junction above holds; in
    Zero mode the lowest slot is corrected so that its :math:`g_r` pairing
    vanishes.
    """
    width = _int(rng, 1, MAX_WIDTH)
    klo = _int(rng, -K_BOUND, K_BOUND - width + 1)
    khi = klo + width - 1
    if below_mode is None:
        below_mode = _pick(rng, (BelowMode.ZERO, BelowMode.STAIRCASE))

    coeffs = {k: random_scalar(rng) for k in range(klo, khi + 1)}
    functions = {khi: random_rank1_function(rng, khi)}
    for k in range(khi - 1, klo - 1, -1):
        tail = pair_rank1(functions[k + 1], g_r(k + 1, coeffs[k + 1] / coeffs[k]))
        functions[k] = random_rank1_function(rng, k, tail=tail)
    if below_mode is BelowMode.ZERO:
        functions[klo] = _kill_lower_pairing(functions[klo], klo)

    slots = [(functions[k], slot_measure(k, alpha, coeffs[k])) for k in range(klo, khi + 1)]
    return make_rank2_function(alpha, random_staircase(rng), (klo, khi), slots, below_mode)


def random_rank2_distribution(rng, alpha, max_terms=3):
    raw = []
    for _ in range(_int(rng, 1, max_terms)):
        k = _int(rng, -K_BOUND, K_BOUND)
        raw.append((k, random_rank1_distribution(rng, k), dist_measure(k, alpha, random_scalar(rng))))
    return reduce_normal_form(alpha, raw)


def random_y_combination(rng, alpha, max_terms=3):
    """A raw random combination of generators of Y"""
    raw = []
    for _ in range(_int(rng, 1, max_terms)):
        raw.extend(y_generator(alpha, _int(rng, -K_BOUND, K_BOUND), random_scalar(rng)))
    return raw


def random_tilde(rng, alpha):
    beta = random_gamma(rng)
    return HeisTilde(alpha, beta, TorsorElement(alpha, circ(beta, alpha), _int(rng, -3, 3)))


def random_hat(rng, alpha, bound=2):
    return HeisHat(random_tilde(rng, alpha), _int(rng, -bound, bound))


def random_quad(rng, bound=3):
    return HeisQuad(*(_int(rng, -bound, bound) for _ in range(4)))
