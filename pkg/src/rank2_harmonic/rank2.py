"""
The rank-2 spaces :math:`D_{+,\\alpha,r}(\\Gamma)` and
:math:`D'_{+,\\alpha,r}(\\Gamma)`, their pairing, the canonical elements
:math:`\\delta_Z` and :math:`\\delta_{\\gamma,b}`, normal forms and the
trivialization :math:`\\psi_Z`.

A function is a product of slots :math:`f_k \\otimes \\mu_k` with
:math:`\\mu_k \\in \\mu_r((k+1,-\\infty), \\alpha)`. It is stored
trivialized: :math:`\\mu_k` is the base measure and the slot function is
:math:`g_k = c(\\mu_k) f_k`. In these coordinates the matching condition
reads :math:`\\delta_{+\\infty}(g_k) = \\langle g_{k+1}, g_r \\rangle`.
Outside the window [klo, khi] the slots are multiples of
:math:`\\delta_{\\ge z_k}` for the tail staircase Z (above the window, and
below it in Staircase mode) or zero (below the window in Zero mode).

Distributions are finite sums of slots :math:`g_k \\otimes \\lambda_k`,
:math:`\\lambda_k \\in \\mu_r(\\alpha, (k+1,-\\infty))`, modulo the subspace Y
spanned by :math:`\\delta_{+\\infty} \\otimes \\lambda_k - \\eta_{k+1}
\\otimes \\lambda_{k+1}`. They are stored trivialized and in normal form.
"""
from collections import namedtuple
from dataclasses import dataclass
from enum import Enum
from typing import Tuple

from sympy.polys.matrices import DomainMatrix

from .rank1 import (
    RankOneDistribution, RankOneFunction, delta_geq, delta_infty_of, delta_plus_infinity,
    eta_distribution, g_r, min_pattern, pair_rank1
)
from .scalar import QR, ZERO, Scalar, r_power
from .torsor import (
    Staircase, Z0, base_measure, base_point, d_staircase, mu_inverse, mu_tensor, theta,
    torsor_inverse
)
from .value_group import BreveElement, as_breve
from .validation import (
    HarmonicError, MatchingConditionError, validate_endpoints, validate_fiber,
    validate_nonzero_measure, validate_same_alpha
)


class BelowMode(Enum):
    ZERO = 'zero'
    STAIRCASE = 'staircase'


def slot_measure(k, alpha, c=1):
    """Base measure of :math:`\\mu_r((k+1,-\\infty), \\alpha)` scaled by c"""
    return base_measure(BreveElement.column(k + 1), alpha, c)


def dist_measure(k, alpha, c=1):
    """Base measure of :math:`\\mu_r(\\alpha, (k+1,-\\infty))` scaled by c"""
    return base_measure(alpha, BreveElement.column(k + 1), c)

##################################################################
##  FUNCTIONS
##################################################################

@dataclass(frozen=True, eq=False)
class RankTwoFunction:
    """
    A staircase-tailed element of :math:`D_{+,\\alpha,r}(\\Gamma)` in
    trivialized form. Build instances with :py:func:`make_rank2_function`.
    """
    alpha: BreveElement
    Z: Staircase
    klo: int
    functions: Tuple[RankOneFunction, ...]
    below_mode: BelowMode

    @property
    def khi(self):
        return self.klo + len(self.functions) - 1

    @property
    def window(self):
        return self.klo, self.khi

    @property
    def slots(self):
        """The raw slots (f_k, mu_k) on the window"""
        return tuple((g, slot_measure(k, self.alpha)) for k, g in enumerate(self.functions, self.klo))

    @property
    def upper_coefficient(self):
        """Coefficient of the first slot above the window, before the staircase factor"""
        return self.functions[-1].tail

    @property
    def lower_coefficient(self):
        """Coefficient of the slot just below the window"""
        if self.below_mode is BelowMode.ZERO:
            return ZERO
        return pair_rank1(self.functions[0], g_r(self.klo))

    def function_at(self, k):
        """The trivialized slot function :math:`g_k` for any k"""
        if self.klo <= k <= self.khi:
            return self.functions[k - self.klo]
        if k > self.khi:
            c = self.upper_coefficient
            for j in range(self.khi + 1, k + 1):
                c = c * r_power(self.Z.height(j))
            return delta_geq(self.Z.height(k), k).scale(c)
        c = self.lower_coefficient
        for j in range(self.klo - 1, k, -1):
            c = c * r_power(-self.Z.height(j))
        return delta_geq(self.Z.height(k), k).scale(c)

    def slot(self, k):
        """The raw slot (f_k, mu_k) for any k"""
        return self.function_at(k), slot_measure(k, self.alpha)

    def widened(self, klo, khi):
        """The same element over a larger window"""
        klo, khi = min(klo, self.klo), max(khi, self.khi)
        return RankTwoFunction(self.alpha, self.Z, klo,
                               tuple(self.function_at(k) for k in range(klo, khi + 1)), self.below_mode)

    @property
    def is_zero(self):
        return (all(g.is_zero for g in self.functions)
                and self.lower_coefficient.is_zero)

    def __eq__(self, other):
        if not isinstance(other, RankTwoFunction):
            return NotImplemented
        if self.alpha != other.alpha:
            return False
        lo, hi = min(self.klo, other.klo) - 1, max(self.khi, other.khi) + 1
        if any(self.function_at(k) != other.function_at(k) for k in range(lo, hi + 1)):
            return False
        # Beyond the compared range the slots are c_k * delta_{>= z_k} with c_k != 0
        if not self.function_at(hi).tail.is_zero and not self.Z.agrees_from(other.Z, hi + 1):
            return False
        if not self.function_at(lo).is_zero and not self.Z.agrees_until(other.Z, lo - 1):
            return False
        return True

    __hash__ = None

    def __str__(self):
        slots = '; '.join(f'{k}: {g}' for k, g in enumerate(self.functions, self.klo))
        return f'Q[alpha={self.alpha}, Z={self.Z}, {self.below_mode.value}]({slots})'


def check_matching(alpha, klo, slots, below_mode):
    """
    Verify the matching condition of raw slots at every junction of the
    window and at the lower boundary in Zero mode.

    Raises
    ------
    MatchingConditionError
    """
    for i in range(len(slots) - 1):
        (f_k, mu_k), (f_next, mu_next) = slots[i], slots[i + 1]
        eta = mu_tensor(mu_next, mu_inverse(mu_k))
        if delta_infty_of(f_k) != pair_rank1(f_next, eta_distribution(eta)):
            raise MatchingConditionError(klo + i)

    if below_mode is BelowMode.ZERO:
        f, mu = slots[0]
        if not pair_rank1(f.scale(mu.c), g_r(klo)).is_zero:
            raise MatchingConditionError(klo - 1, f'Boundary condition violated below k={klo}')
    return True


def make_rank2_function(alpha, Z, window, slots, below_mode=BelowMode.STAIRCASE):
    """
    Validate raw slot data and build a rank-2 function.

    Parameters
    ----------
    alpha : :py:class:`rank2_harmonic.value_group.BreveElement`
        The base point
    Z : :py:class:`rank2_harmonic.torsor.Staircase`
        Tail pattern outside the window
    window : tuple(int, int)
        The slots klo..khi carried explicitly. An empty window with no
        slots in Staircase mode is the characteristic element
        :math:`\\delta_Z` of :py:func:`delta_staircase`
    slots : list(tuple(RankOneFunction, MeasureElement))
        Per slot the function :math:`f_k` on fiber k and
        :math:`\\mu_k \\in \\mu_r((k+1,-\\infty), \\alpha)`
    below_mode : :py:class:`BelowMode`
        Whether the slots below the window vanish or follow Z

    Returns
    -------
    Q : :py:class:`RankTwoFunction`
        The validated element

    Raises
    ------
    MatchingConditionError, ZeroMeasureError, EndpointMismatchError, FiberMismatchError
    """
    alpha = as_breve(alpha)
    klo, khi = window
    if khi < klo:
        if slots or below_mode is not BelowMode.STAIRCASE:
            raise HarmonicError(f'Empty window {window} needs Staircase mode and no slots')
        return delta_staircase(Z, alpha)
    if len(slots) != khi - klo + 1:
        raise HarmonicError(f'Window {window} needs {khi - klo + 1} slots, got {len(slots)}')

    for k, (f, mu) in enumerate(slots, klo):
        validate_fiber(f, k, 'slot function')
        validate_endpoints(mu, BreveElement.column(k + 1), alpha, f'slot measure {k}')
        validate_nonzero_measure(mu, f'slot measure {k}')
    check_matching(alpha, klo, slots, below_mode)

    functions = tuple(f.scale(mu.c) for f, mu in slots)
    if below_mode is BelowMode.STAIRCASE and pair_rank1(functions[0], g_r(klo)).is_zero:
        below_mode = BelowMode.ZERO
    return RankTwoFunction(alpha, Z, klo, functions, below_mode)


def delta_staircase(Z, alpha, window=(0, 0)):
    """
    The characteristic element :math:`\\delta_Z = \\prod f_{k,Z} \\otimes
    \\mu_{k,Z}` with :math:`f_{k,Z} = \\delta_{\\ge z_k}` and
    :math:`\\mu_{k,Z} = \\vartheta_r(d_{Z,(k+1,-\\infty),\\alpha})`.
    """
    alpha = as_breve(alpha)
    klo, khi = window
    slots = [(delta_geq(Z.height(k), k), theta(d_staircase(Z, BreveElement.column(k + 1), alpha)))
             for k in range(klo, khi + 1)]
    return make_rank2_function(alpha, Z, window, slots, BelowMode.STAIRCASE)

##################################################################
##  TRIVIALIZATION
##################################################################

TrivializedFunction = namedtuple('TrivializedFunction', 'alpha Z klo functions tail below_mode')


def staircase_measure(Z, k, alpha):
    """:math:`\\mu_{k,Z} = \\vartheta_r(d_{Z,(k+1,-\\infty),\\alpha})`"""
    return theta(d_staircase(Z, BreveElement.column(k + 1), alpha))


def staircase_eta(Z, k):
    """:math:`\\eta_{k+1,Z} = \\vartheta_r(d_{Z,(k+2,-\\infty),(k+1,-\\infty)})`"""
    return theta(d_staircase(Z, BreveElement.column(k + 2), BreveElement.column(k + 1)))


def psi_Z_trivialize(Q, Z):
    """
    The isomorphism :math:`\\psi_Z`, replacing each slot by
    :math:`(\\mu_k / \\mu_{k,Z}) f_k` on the window.
    """
    functions = tuple(g.scale(staircase_measure(Z, k, Q.alpha).c.inv())
                      for k, g in enumerate(Q.functions, Q.klo))
    return TrivializedFunction(Q.alpha, Z, Q.klo, functions, Q.Z, Q.below_mode)


def psi_Z_inverse(T):
    """The inverse of :py:func:`psi_Z_trivialize`"""
    functions = tuple(g.scale(staircase_measure(T.Z, k, T.alpha).c)
                      for k, g in enumerate(T.functions, T.klo))
    return RankTwoFunction(T.alpha, T.tail, T.klo, functions, T.below_mode)


def trivialized_matching_holds(T):
    """Whether :math:`\\delta_{+\\infty}(g_k) = \\eta_{k+1,Z}(g_{k+1})` on the window"""
    return all(
        delta_infty_of(T.functions[i]) == pair_rank1(T.functions[i + 1],
                                                     eta_distribution(staircase_eta(T.Z, T.klo + i)))
        for i in range(len(T.functions) - 1)
    )

##################################################################
##  DISTRIBUTIONS
##################################################################

@dataclass(frozen=True)
class RankTwoDistribution:
    """
    A distribution in normal form: trivialized slot distributions
    (k, g_k) sorted by k, none with a :math:`\\delta_{+\\infty}`-component.
    Build instances with :py:func:`reduce_normal_form`.
    """
    alpha: BreveElement
    terms: Tuple[Tuple[int, RankOneDistribution], ...] = ()

    @property
    def raw_terms(self):
        """The terms as (k, g_k, lambda_k)"""
        return tuple((k, g, dist_measure(k, self.alpha)) for k, g in self.terms)

    @property
    def is_zero(self):
        return not self.terms

    def term(self, k):
        for j, g in self.terms:
            if j == k:
                return g
        return RankOneDistribution.zero(k)

    def __add__(self, other):
        validate_same_alpha(self, other)
        return reduce_normal_form(self.alpha, self.raw_terms + other.raw_terms)

    def scale(self, c):
        return reduce_normal_form(self.alpha, [(k, g.scale(c), lam) for k, g, lam in self.raw_terms])

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def __str__(self):
        return f'S[alpha={self.alpha}](' + '; '.join(f'{k}: {g}' for k, g in self.terms) + ')'


def reduce_normal_form(alpha, raw):
    """
    Reduce a raw sum of slots to the normal form of its class modulo Y.

    From the lowest slot upwards, the :math:`\\delta_{+\\infty}`-component
    :math:`c \\delta_{+\\infty} \\otimes \\lambda_k` is traded for
    :math:`c \\eta_{k+1} \\otimes \\lambda_{k+1}`.

    Parameters
    ----------
    alpha : :py:class:`rank2_harmonic.value_group.BreveElement`
        The base point
    raw : list(tuple(int, RankOneDistribution, MeasureElement))
        Slots (k, g_k, lambda_k) with
        :math:`\\lambda_k \\in \\mu_r(\\alpha, (k+1,-\\infty))`

    Returns
    -------
    S : :py:class:`RankTwoDistribution`
        The normal form
    """
    alpha = as_breve(alpha)
    acc = {}
    for k, g, lam in raw:
        validate_fiber(g, k, 'slot distribution')
        validate_endpoints(lam, alpha, BreveElement.column(k + 1), f'slot measure {k}')
        G = g.scale(lam.c)
        acc[k] = acc[k] + G if k in acc else G

    terms = []
    if acc:
        k, top, carry = min(acc), max(acc), None
        while k <= top or carry is not None:
            G = acc.get(k)
            if carry is not None:
                G = carry if G is None else G + carry
                carry = None
            if G is not None:
                c = G.delta_plus_component()
                if not c.is_zero:
                    G = G - delta_plus_infinity(k).scale(c)
                    carry = g_r(k + 1, c)
                if not G.is_zero:
                    terms.append((k, G))
            k += 1
    return RankTwoDistribution(alpha, tuple(terms))


def y_generator(alpha, k, c=1):
    """The raw generator :math:`c(\\delta_{+\\infty}@k - \\eta_{k+1}@(k+1))` of Y"""
    return [(k, delta_plus_infinity(k).scale(c), dist_measure(k, alpha)),
            (k + 1, g_r(k + 1, -Scalar(c)), dist_measure(k + 1, alpha))]


def delta_gamma(gamma, b, alpha):
    """
    The distribution :math:`\\delta_{\\gamma,b}` for
    :math:`b \\in \\mu_r(\\alpha, \\gamma)`.

    For :math:`\\gamma = (k_0, p_0)` it sits on slot :math:`k_0` with the
    pattern :math:`a_x = 1` (x <= p_0), :math:`r^{-(x-p_0)}` (x >= p_0) and
    :math:`\\lambda = b \\otimes \\vartheta_r(e_\\gamma^{-1})`, where
    :math:`e_\\gamma = d_{Z_\\gamma,(k_0+1,-\\infty),\\gamma}` for the staircase
    with column minimum :math:`p_0` at :math:`k_0`. For
    :math:`\\gamma = (n, -\\infty)` it is :math:`g_r` on slot n.

    Raises
    ------
    EndpointMismatchError
    """
    alpha, gamma = as_breve(alpha), as_breve(gamma)
    validate_endpoints(b, alpha, gamma, 'delta measure')
    if b.c.is_zero:
        return RankTwoDistribution(alpha)

    if gamma.is_column:
        k = gamma.n
        e = base_point(BreveElement.column(k + 1), gamma)
        g = g_r(k)
    else:
        k = gamma.n
        e = d_staircase(Z0.with_height(k, gamma.p), BreveElement.column(k + 1), gamma)
        g = min_pattern(gamma.p, k)
    lam = mu_tensor(b, theta(torsor_inverse(e)))
    return reduce_normal_form(alpha, [(k, g, lam)])

##################################################################
##  PAIRING AND BASE POINTS
##################################################################

def pair_rank2(Q, S):
    """
    The pairing :math:`\\sum_k \\langle f_k, g_k \\rangle (\\mu_k \\otimes
    \\lambda_k)` over the finitely many slots of S.

    Raises
    ------
    BasePointMismatchError
    """
    validate_same_alpha(Q, S)
    return pair_raw(Q, S.raw_terms)


def pair_raw(Q, raw):
    """
    Pair a function with a raw sum of slots (k, g_k, lambda_k), before any
    reduction modulo Y.
    """
    out = ZERO
    for k, g, lam in raw:
        f, mu = Q.slot(k)
        out = out + pair_rank1(f, g) * mu_tensor(mu, lam).c
    return out


def retarget_alpha(X, h):
    """
    Change the base point: :math:`Q \\otimes h` for
    :math:`h \\in \\mu_r(\\alpha, \\alpha')` on functions and
    :math:`h \\otimes S` for :math:`h \\in \\mu_r(\\alpha', \\alpha)` on
    distributions.

    Raises
    ------
    ZeroMeasureError, EndpointMismatchError
    """
    validate_nonzero_measure(h, 'retarget measure')
    if isinstance(X, RankTwoFunction):
        validate_endpoints(h, X.alpha, h.beta, 'retarget measure')
        return RankTwoFunction(h.beta, X.Z, X.klo, tuple(g.scale(h.c) for g in X.functions), X.below_mode)
    validate_endpoints(h, h.alpha, X.alpha, 'retarget measure')
    return reduce_normal_form(h.alpha, [(k, g, mu_tensor(h, lam)) for k, g, lam in X.raw_terms])

##################################################################
##  FINITE-WINDOW NON-DEGENERACY
##################################################################

def truncated_pairing_rank(m, P=2):
    """
    Exact rank of the pairing between a spanning set of the truncated
    space :math:`X_m` (slots :math:`-m \\le k < m`, each a combination of
    :math:`\\delta_{\\ge p}` with :math:`|p| \\le P`, subject to the 2m-1
    matching conditions) and the slot distributions
    :math:`a_x = \\min(1, r^{-(x-p_0)})` for :math:`|p_0| \\le P`.

    Returns
    -------
    rank : int
        Rank of the pairing matrix over :math:`\\mathbb{Q}(r)`
    dim : int
        Dimension of :math:`X_m`
    """
    K = QR.to_domain()
    ks = list(range(-m, m))
    ps = list(range(-P, P + 1))
    width = len(ps)
    n = len(ks) * width

    def col(k, p):
        return (k + m) * width + (p + P)

    # Matching conditions between consecutive slots
    rows = []
    for k in ks[:-1]:
        row = [K.zero] * n
        for p in ps:
            row[col(k, p)] = K.one
            row[col(k + 1, p)] = (-r_power(-p))._f
        rows.append(row)
    conditions = DomainMatrix(rows, (len(rows), n), K)
    span = conditions.nullspace()

    # Slot distributions evaluated on the basis delta_{>= p}
    rows = []
    for k in ks:
        for x in ps:
            pattern = min_pattern(x, k)
            row = [K.zero] * n
            for p in ps:
                row[col(k, p)] = pattern(p)._f
            rows.append(row)
    functionals = DomainMatrix(rows, (len(rows), n), K)

    pairing = span * functionals.transpose()
    return pairing.rank(), span.shape[0]
