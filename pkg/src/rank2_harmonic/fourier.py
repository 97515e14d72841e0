"""
Fourier transforms: the fiber transforms :math:`F_{\\eta_k}` on
:math:`D_+(T)` and :math:`D'_+(T)` and the rank-2 transforms :math:`F_\\gamma`.

The fiber reflection attached to :math:`\\gamma = (\\gamma_1, \\gamma_2)` is
:math:`x \\mapsto x^{\\perp} = 1 - \\gamma_2 - x` and sends fiber k to fiber
:math:`-k - \\gamma_1`.
"""
from .rank1 import RankOneFunction
from .rank2 import (
    BelowMode, RankTwoDistribution, RankTwoFunction, make_rank2_function, reduce_normal_form
)
from .scalar import RPARAM
from .torsor import fiber_measure, mu_fiber_value, mu_inverse, mu_perp, mu_tensor
from .value_group import BreveElement, perp
from .validation import HarmonicError, validate_endpoints, validate_fiber, validate_nonzero_measure


def reflected_fiber(k, gamma):
    return -k - gamma.n


def _check_eta(eta):
    k = eta.beta.n
    validate_endpoints(eta, BreveElement.column(k + 1), BreveElement.column(k), 'fiber measure')
    validate_nonzero_measure(eta, 'fiber measure')
    return k

##################################################################
##  FIBER TRANSFORMS
##################################################################

def fourier_fiber_fn(f, gamma, eta):
    """
    The transform :math:`F_{\\eta_k}(\\delta_{\\ge x}) = \\eta_k(x)
    \\delta_{\\ge x^{\\perp}}`, extended linearly.

    Parameters
    ----------
    f : :py:class:`rank2_harmonic.rank1.RankOneFunction`
        A function on fiber k
    gamma : :py:class:`rank2_harmonic.value_group.GammaElement`
        The transform parameter
    eta : :py:class:`rank2_harmonic.torsor.MeasureElement`
        A nonzero measure on :math:`[(k+1,-\\infty), (k,-\\infty)]`

    Returns
    -------
    out : :py:class:`rank2_harmonic.rank1.RankOneFunction`
        The transform on fiber :math:`-k-\\gamma_1`

    Raises
    ------
    ZeroMeasureError, FiberMismatchError
    """
    k = _check_eta(eta)
    validate_fiber(f, k, 'transformed function')
    s = 1 - gamma.p
    coeffs = {s - p: c * mu_fiber_value(eta, p) for p, c in f.coefficients().items()}
    return RankOneFunction.from_coefficients(reflected_fiber(k, gamma), coeffs)


def fourier_fiber_dist(a, gamma, eta):
    """
    The transform :math:`\\tilde{a}_{y} = \\eta_k(y) a_{y^{\\perp}}` of a
    distribution on fiber :math:`-k-\\gamma_1`, landing on fiber k.

    Raises
    ------
    ZeroMeasureError, FiberMismatchError
    """
    k = _check_eta(eta)
    validate_fiber(a, reflected_fiber(k, gamma), 'transformed distribution')
    return a.reflect(1 - gamma.p, k).mul_geometric(eta.c, RPARAM)


def eta_inverse(eta, gamma):
    """
    The measure :math:`\\eta_k^{-1}` on the reflected fiber, i.e. the
    perp image of the inverse of :math:`\\eta_k`.
    """
    return mu_perp(mu_inverse(eta), gamma)

##################################################################
##  RANK-2 TRANSFORMS
##################################################################

def fourier_rank2_fn(Q, gamma):
    """
    The transform :math:`F_\\gamma(Q) = \\prod_k F_{\\eta_k}(f_k) \\otimes
    \\mu_{k-1}` with :math:`\\eta_k = \\mu_k \\otimes \\mu_{k-1}^{-1}`, an
    element over :math:`\\alpha^{\\perp(\\gamma)}`. Slot k lands on fiber
    :math:`-k-\\gamma_1` and the tail staircase is reflected.

    Parameters
    ----------
    Q : :py:class:`rank2_harmonic.rank2.RankTwoFunction`
        The input element
    gamma : :py:class:`rank2_harmonic.value_group.GammaElement`
        The transform parameter

    Returns
    -------
    out : :py:class:`rank2_harmonic.rank2.RankTwoFunction`
        The validated transform
    """
    g1 = gamma.n
    window = (-Q.khi - g1, -Q.klo - g1)
    slots = []
    for kp in range(window[0], window[1] + 1):
        k = -kp - g1
        f, mu = Q.slot(k)
        _, mu_prev = Q.slot(k - 1)
        eta = mu_tensor(mu, mu_inverse(mu_prev))
        slots.append((fourier_fiber_fn(f, gamma, eta), mu_perp(mu_prev, gamma)))

    # Tails above the input window become tails below the output window
    mode = BelowMode.ZERO if Q.upper_coefficient.is_zero else BelowMode.STAIRCASE
    return make_rank2_function(perp(Q.alpha, gamma), Q.Z.reflect(gamma), window, slots, mode)


def fourier_rank2_dist(S, gamma):
    """
    The transform of a distribution over :math:`\\beta` into one over
    :math:`\\beta^{\\perp(\\gamma)}`: slot k' goes to slot
    :math:`k = -k'-\\gamma_1` with :math:`F_{\\eta_k}` and measure
    :math:`\\perp(\\lambda_{k'}) \\otimes \\eta_k^{-1}`, followed by
    :py:func:`rank2_harmonic.rank2.reduce_normal_form`.
    """
    raw = []
    for kp, g, lam in S.raw_terms:
        k = reflected_fiber(kp, gamma)
        eta = fiber_measure(k)
        raw.append((k, fourier_fiber_dist(g, gamma, eta), mu_tensor(mu_perp(lam, gamma), mu_inverse(eta))))
    return reduce_normal_form(perp(S.alpha, gamma), raw)


def fourier(X, gamma):
    """Dispatch :math:`F_\\gamma` on rank-2 functions and distributions"""
    if isinstance(X, RankTwoFunction):
        return fourier_rank2_fn(X, gamma)
    if isinstance(X, RankTwoDistribution):
        return fourier_rank2_dist(X, gamma)
    raise HarmonicError(f'No Fourier transform for {type(X).__name__}')
