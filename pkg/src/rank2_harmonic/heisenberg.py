"""
The groups :math:`\\tilde{\\Gamma}_\\alpha` and
:math:`\\hat{\\Gamma}_\\alpha = \\tilde{\\Gamma}_\\alpha \\rtimes \\mathbb{Z}`,
their coordinate models Heis(3, Z) and the quadruple group, the
transport :math:`\\Lambda` between base points, the isomorphisms
:math:`\\rho` and :math:`\\varrho`, and the actions on rank-2 spaces.
"""
from collections import namedtuple
from dataclasses import dataclass

import numpy as np

from .rank1 import translate
from .rank2 import (
    RankTwoDistribution, RankTwoFunction, make_rank2_function, reduce_normal_form, retarget_alpha
)
from .torsor import (
    TorsorElement, base_measure, base_point, c_act_torsor, gamma_act_torsor, mu_c_act,
    mu_gamma_act, mu_inverse, mu_tensor, perp_torsor, theta, torsor_compose, torsor_inverse
)
from .utils import triangular
from .value_group import ALPHA0, BreveElement, GammaElement, as_breve, circ, perp, shear
from .validation import (
    ExtendedGroupError, HarmonicError, validate_endpoints, validate_same_alpha
)

##################################################################
##  THE GROUP OF PAIRS (beta, h)
##################################################################

@dataclass(frozen=True)
class HeisTilde:
    """
    An element :math:`(\\beta, h)` of :math:`\\tilde{\\Gamma}_\\alpha` with
    :math:`h \\in [\\alpha, \\beta \\circ \\alpha]`.
    """
    alpha: BreveElement
    beta: GammaElement
    h: TorsorElement

    def __post_init__(self):
        validate_endpoints(self.h, self.alpha, circ(self.beta, self.alpha), 'group element torsor')

    def __str__(self):
        return f'({self.beta}, {self.h})'


def tilde_identity(alpha):
    alpha = as_breve(alpha)
    return HeisTilde(alpha, GammaElement(0, 0), base_point(alpha, alpha))


def tilde_mul(x, y):
    """
    The group law :math:`(\\beta_1 + \\beta_2, h_1 \\otimes \\beta_1(h_2))`.

    Raises
    ------
    BasePointMismatchError
    """
    validate_same_alpha(x, y)
    return HeisTilde(x.alpha, x.beta + y.beta, torsor_compose(x.h, gamma_act_torsor(x.beta, y.h)))


def tilde_inverse(x):
    """:math:`(-\\beta, ((-\\beta)(h))^{-1})`"""
    return HeisTilde(x.alpha, -x.beta, torsor_inverse(gamma_act_torsor(-x.beta, x.h)))


def tilde_commutator(x, y):
    return tilde_mul(tilde_mul(x, y), tilde_mul(tilde_inverse(x), tilde_inverse(y)))


def heis_iso(a, b, c):
    """
    The isomorphism Heis(3, Z) to :math:`\\tilde{\\Gamma}_{(0,-\\infty)}`,
    :math:`(a, b, c) \\mapsto ((b, a), d_b - c)` where :math:`d_b` is the base
    point of :math:`[(0,-\\infty), (b,-\\infty)]`.
    """
    beta = GammaElement(b, a)
    return HeisTilde(ALPHA0, beta, TorsorElement(ALPHA0, circ(beta, ALPHA0), -c))


def heis_iso_inverse(x):
    """
    The coordinates (a, b, c) of an element, read at :math:`(0,-\\infty)`
    after transport.
    """
    if x.alpha != ALPHA0:
        x = lambda_iso(x, ALPHA0)
    return x.beta.p, x.beta.n, -x.h.t


def lambda_iso(x, target, g=None):
    """
    The transport :math:`\\Lambda_{\\alpha_2,\\alpha_1}` from
    :math:`\\tilde{\\Gamma}_{\\alpha_1}` to :math:`\\tilde{\\Gamma}_{\\alpha_2}`,
    :math:`(\\beta, h) \\mapsto (\\beta, g \\otimes h \\otimes \\beta(g^{-1}))`.
    The result does not depend on :math:`g \\in [\\alpha_2, \\alpha_1]`.

    Parameters
    ----------
    x : :py:class:`HeisTilde`
        Element over :math:`\\alpha_1`
    target : :py:class:`rank2_harmonic.value_group.BreveElement`
        The base point :math:`\\alpha_2`
    g : :py:class:`rank2_harmonic.torsor.TorsorElement`, optional
        Transport element, the base point of :math:`[\\alpha_2, \\alpha_1]` by
        default

    Returns
    -------
    out : :py:class:`HeisTilde`
        Element over :math:`\\alpha_2`
    """
    target = as_breve(target)
    if g is None:
        g = base_point(target, x.alpha)
    validate_endpoints(g, target, x.alpha, 'transport element')
    h = torsor_compose(torsor_compose(g, x.h), gamma_act_torsor(x.beta, torsor_inverse(g)))
    return HeisTilde(target, x.beta, h)


def t_act(m, x):
    """
    :math:`T_{m,\\alpha}(\\beta, h) = (m \\diamond \\beta, m(h))`, an element of
    :math:`\\tilde{\\Gamma}_{m \\diamond \\alpha}`.
    """
    return HeisTilde(shear(m, x.alpha), shear(m, x.beta), c_act_torsor(m, x.h))


def c_act_tilde(m, x):
    """
    The automorphism of :math:`\\tilde{\\Gamma}_\\alpha` defining the
    semidirect product, :math:`\\Lambda_{\\alpha, m \\diamond \\alpha} \\circ T_{m,\\alpha}`.
    """
    return lambda_iso(t_act(m, x), x.alpha)

##################################################################
##  THE EXTENDED GROUP
##################################################################

@dataclass(frozen=True)
class HeisHat:
    """An element (f, m) of :math:`\\hat{\\Gamma}_\\alpha`"""
    f: HeisTilde
    m: int

    @property
    def alpha(self):
        return self.f.alpha

    def __str__(self):
        return f'({self.f}, {self.m})'


def ext_identity(alpha):
    return HeisHat(tilde_identity(alpha), 0)


def ext_mul(x, y):
    """
    The semidirect product law :math:`(f_1, m_1)(f_2, m_2) = (f_1 m_1(f_2), m_1 + m_2)`.

    Raises
    ------
    BasePointMismatchError
    """
    validate_same_alpha(x, y)
    return HeisHat(tilde_mul(x.f, c_act_tilde(x.m, y.f)), x.m + y.m)


def ext_inverse(x):
    return HeisHat(c_act_tilde(-x.m, tilde_inverse(x.f)), -x.m)


def ext_commutator(x, y):
    return ext_mul(ext_mul(x, y), ext_mul(ext_inverse(x), ext_inverse(y)))

##################################################################
##  QUADRUPLES
##################################################################

HeisQuad = namedtuple('HeisQuad', 'a b c m', defaults=(0,))
QUAD_IDENTITY = HeisQuad(0, 0, 0, 0)


def quad_identity():
    return QUAD_IDENTITY


def quad_mul(x, y):
    """
    The group law

    .. math::
        (a_1 + a_2 + m_1 b_2, b_1 + b_2,
        c_1 + c_2 + a_1 b_2 + \\frac{1}{2} b_2 (b_2 - 1) m_1, m_1 + m_2)

    Parameters
    ----------
    x : :py:class:`HeisQuad`
        Left factor
    y : :py:class:`HeisQuad`
        Right factor

    Returns
    -------
    out : :py:class:`HeisQuad`
        The product
    """
    return HeisQuad(x.a + y.a + x.m * y.b, x.b + y.b,
                    x.c + y.c + x.a * y.b + triangular(y.b) * x.m, x.m + y.m)


def quad_inverse(x):
    """:math:`(-a + mb, -b, -c + ab - \\frac{1}{2}b(b+1)m, -m)`"""
    return HeisQuad(-x.a + x.m * x.b, -x.b, -x.c + x.a * x.b - triangular(-x.b) * x.m, -x.m)


def quad_commutator(x, y):
    return quad_mul(quad_mul(x, y), quad_mul(quad_inverse(x), quad_inverse(y)))


def is_central(x):
    """Whether x commutes with the generators (1,0,0,0), (0,1,0,0) and (0,0,0,1)"""
    gens = (HeisQuad(1, 0, 0, 0), HeisQuad(0, 1, 0, 0), HeisQuad(0, 0, 0, 1))
    return all(quad_mul(x, g) == quad_mul(g, x) for g in gens)


def matrix_rep(x):
    """
    The faithful representation in GL(4, Z)

    .. math::
        \\begin{pmatrix}
        1 & m & a & c \\\\
        0 & 1 & b & \\frac{1}{2}b(b-1) \\\\
        0 & 0 & 1 & b \\\\
        0 & 0 & 0 & 1
        \\end{pmatrix}
    """
    return np.array([
        [1, x.m, x.a, x.c],
        [0, 1, x.b, triangular(x.b)],
        [0, 0, 1, x.b],
        [0, 0, 0, 1],
    ], dtype=np.int64)


def phi_k(k, x):
    """The section change :math:`(a + kb, b, c + \\frac{1}{2}b(b-1)k, m)`"""
    return HeisQuad(x.a + k * x.b, x.b, x.c + triangular(x.b) * k, x.m)


def section_conjugate(k, x):
    """Conjugation by the loop generator (0, 0, 0, k)"""
    return quad_mul(quad_mul(HeisQuad(0, 0, 0, k), x), HeisQuad(0, 0, 0, -k))


def quad_to_hat(x, alpha=ALPHA0):
    """
    The element of :math:`\\hat{\\Gamma}_\\alpha` with coordinates x, defined
    at :math:`(0,-\\infty)` and transported by :math:`\\Lambda`.
    """
    f = heis_iso(x.a, x.b, x.c)
    alpha = as_breve(alpha)
    if alpha != ALPHA0:
        f = lambda_iso(f, alpha)
    return HeisHat(f, x.m)


def hat_to_quad(x):
    a, b, c = heis_iso_inverse(x.f)
    return HeisQuad(a, b, c, x.m)

##################################################################
##  INVOLUTION ISOMORPHISMS
##################################################################

def rho(x, gamma):
    """
    The isomorphism :math:`\\rho_{\\alpha,\\gamma}` onto
    :math:`\\tilde{\\Gamma}_{\\alpha^{\\perp(\\gamma)}}`,
    :math:`(\\beta, h) \\mapsto (-\\beta, \\varepsilon(h))`.
    """
    return HeisTilde(perp(x.alpha, gamma), -x.beta, perp_torsor(x.h, gamma))


def varrho(x, gamma):
    """
    The extended isomorphism :math:`(f, m) \\mapsto (\\rho(f), m)`.

    Raises
    ------
    ExtendedGroupError
    """
    if gamma.n != 0:
        raise ExtendedGroupError(f'The extended isomorphism needs pi(gamma) = 0, got {gamma}')
    return HeisHat(rho(x.f, gamma), x.m)

##################################################################
##  ACTIONS ON RANK-2 SPACES
##################################################################

def tilde_act_fn(x, Q):
    """
    :math:`(\\beta, h) \\circ Q = \\prod_k \\beta(f_k) \\otimes
    (\\beta(\\mu_k) \\otimes \\vartheta_r(h^{-1}))`: slot k moves to
    :math:`k + \\beta_1` and is translated by :math:`\\beta_2`.
    """
    validate_same_alpha(x, Q)
    b1, b2 = x.beta.n, x.beta.p
    twist = theta(torsor_inverse(x.h))
    slots = [(translate(f, b2, k + b1), mu_tensor(mu_gamma_act(x.beta, mu), twist))
             for k, (f, mu) in ((k, Q.slot(k)) for k in range(Q.klo, Q.khi + 1))]
    return make_rank2_function(Q.alpha, Q.Z.translate(x.beta), (Q.klo + b1, Q.khi + b1), slots,
                               Q.below_mode)


def tilde_act_dist(x, S):
    """:math:`(\\beta, h) \\circ S = \\sum_k \\beta(g_k) \\otimes (\\vartheta_r(h) \\otimes \\beta(\\lambda_k))`"""
    validate_same_alpha(x, S)
    b1, b2 = x.beta.n, x.beta.p
    twist = theta(x.h)
    raw = [(k + b1, translate(g, b2, k + b1), mu_tensor(twist, mu_gamma_act(x.beta, lam)))
           for k, g, lam in S.raw_terms]
    return reduce_normal_form(S.alpha, raw)


def _c_act_fn_at_base(m, Q):
    slots = [(translate(f, m * k), mu_c_act(m, mu))
             for k, (f, mu) in ((k, Q.slot(k)) for k in range(Q.klo, Q.khi + 1))]
    return make_rank2_function(ALPHA0, Q.Z.shear(m), Q.window, slots, Q.below_mode)


def _c_act_dist_at_base(m, S):
    raw = [(k, translate(g, m * k), mu_c_act(m, lam)) for k, g, lam in S.raw_terms]
    return reduce_normal_form(ALPHA0, raw)


def c_act_fn(m, Q, h=None):
    """
    :math:`m \\diamond Q = (m \\diamond (Q \\otimes h)) \\otimes h^{-1}` for
    :math:`h \\in \\mu_r(\\alpha, (0,-\\infty))`, the shear being defined at
    :math:`(0,-\\infty)`. The result does not depend on h.
    """
    if h is None:
        h = base_measure(Q.alpha, ALPHA0)
    moved = _c_act_fn_at_base(m, retarget_alpha(Q, h))
    return retarget_alpha(moved, mu_inverse(h))


def c_act_dist(m, S, h=None):
    """The shear of a distribution, conjugated through :math:`h \\in \\mu_r((0,-\\infty), \\alpha)`"""
    if h is None:
        h = base_measure(ALPHA0, S.alpha)
    moved = _c_act_dist_at_base(m, retarget_alpha(S, h))
    return retarget_alpha(moved, mu_inverse(h))


def act(g, X):
    """
    The action of a group element on a rank-2 function or distribution:
    :math:`(f, m) \\diamond X = f \\circ (m \\diamond X)`. Quadruples are read
    as elements of :math:`\\hat{\\Gamma}_\\alpha` through :py:func:`quad_to_hat`.

    Parameters
    ----------
    g : :py:class:`HeisTilde`, :py:class:`HeisHat` or :py:class:`HeisQuad`
        The group element
    X : :py:class:`rank2_harmonic.rank2.RankTwoFunction` or :py:class:`rank2_harmonic.rank2.RankTwoDistribution`
        The element acted on

    Returns
    -------
    out : same type as X
        The translate

    Raises
    ------
    BasePointMismatchError
    """
    if isinstance(g, HeisQuad):
        g = quad_to_hat(g, X.alpha)
    if isinstance(X, RankTwoFunction):
        tilde, shear_ = tilde_act_fn, c_act_fn
    elif isinstance(X, RankTwoDistribution):
        tilde, shear_ = tilde_act_dist, c_act_dist
    else:
        raise HarmonicError(f'Cannot act on {type(X).__name__}')

    if isinstance(g, HeisTilde):
        return tilde(g, X)
    validate_same_alpha(g, X)
    return tilde(g.f, shear_(g.m, X))
