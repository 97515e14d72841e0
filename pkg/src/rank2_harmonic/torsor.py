"""
Z-torsors :math:`[\\alpha, \\beta]` with canonical integer coordinates,
staircase sets, the actions of :math:`\\Gamma` and :math:`C`, the involution
isomorphism and the measure lines :math:`\\mu_r(\\alpha, \\beta)`.

Every torsor element is an integer offset t from the canonical base point
:math:`d_0^{\\alpha,\\beta}`, the counting function normalized by
:math:`d_0(Z_0 \\cap R_{\\alpha,\\beta}) = 0` with :math:`Z_0` the staircase
of height 0. For :math:`\\alpha < \\beta` the torsor is the dual of
:math:`[\\beta, \\alpha]` and coordinate t is the functional
:math:`d \\mapsto (d - d_0) + t`.
"""
from collections import namedtuple
from dataclasses import dataclass
from typing import Tuple

from .scalar import Scalar, r_power
from .value_group import BreveElement, as_breve, circ, perp, shear
from .utils import half_product
from .validation import (
    EndpointMismatchError, HarmonicError, NotEquivalentError, ZeroMeasureError,
    validate_endpoints
)

##################################################################
##  STAIRCASES
##################################################################

def _normalize_exceptions(slope, intercept, exceptions):
    if isinstance(exceptions, dict):
        exceptions = exceptions.items()
    out = {}
    for n, z in exceptions:
        out[int(n)] = int(z)
    return tuple(sorted((n, z) for n, z in out.items() if z != slope * n + intercept))


@dataclass(frozen=True)
class Staircase:
    """
    A staircase set :math:`Z \\subset \\Gamma` with
    :math:`Z \\cap \\pi^{-1}(n) = \\{(n, p) : p \\ge z_n\\}`, where
    :math:`z_n = a n + b` except on finitely many columns.

    Parameters
    ----------
    slope : int
        The slope a of the default column minimum
    intercept : int
        The intercept b of the default column minimum
    exceptions : tuple(tuple(int, int)) or dict
        Column minima overriding the default. Entries equal to the
        default are dropped.
    """
    slope: int = 0
    intercept: int = 0
    exceptions: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'exceptions',
                           _normalize_exceptions(self.slope, self.intercept, self.exceptions))

    @classmethod
    def constant(cls, z):
        """The staircase with height z in every column"""
        return cls(0, z)

    def default(self, n):
        return self.slope * n + self.intercept

    def height(self, n):
        """The column minimum :math:`z_n`"""
        for m, z in self.exceptions:
            if m == n:
                return z
        return self.default(n)

    def with_height(self, n, z):
        """A copy with column minimum z at column n"""
        exc = dict(self.exceptions)
        exc[n] = z
        return Staircase(self.slope, self.intercept, exc)

    def translate(self, beta):
        """:math:`\\beta + Z`, i.e. :math:`z'_n = z_{n - b_1} + b_2`"""
        b1, b2 = beta.n, beta.p
        return Staircase(self.slope, self.intercept - self.slope * b1 + b2,
                         {n + b1: z + b2 for n, z in self.exceptions})

    def shear(self, m):
        """:math:`m \\diamond Z`, i.e. :math:`z'_n = z_n + m n`"""
        return Staircase(self.slope + m, self.intercept,
                         {n: z + m * n for n, z in self.exceptions})

    def reflect(self, gamma):
        """
        The fiber reflection used by the Fourier transform:
        :math:`z'_n = 1 - \\gamma_2 - z_{-n-\\gamma_1}`.
        """
        s = 1 - gamma.p
        return Staircase(self.slope, s + self.slope * gamma.n - self.intercept,
                         {-n - gamma.n: s - z for n, z in self.exceptions})

    def agrees_from(self, other, n0):
        """Whether :math:`z_n = z'_n` for every n >= n0"""
        if (self.slope, self.intercept) != (other.slope, other.intercept):
            return False
        cols = {n for n, _ in self.exceptions} | {n for n, _ in other.exceptions}
        return all(self.height(n) == other.height(n) for n in cols if n >= n0)

    def agrees_until(self, other, n0):
        """Whether :math:`z_n = z'_n` for every n <= n0"""
        if (self.slope, self.intercept) != (other.slope, other.intercept):
            return False
        cols = {n for n, _ in self.exceptions} | {n for n, _ in other.exceptions}
        return all(self.height(n) == other.height(n) for n in cols if n <= n0)

    def offset(self, alpha, beta):
        """
        Signed offset :math:`d_0^{\\alpha,\\beta}(Z \\cap R_{\\alpha,\\beta})`
        of this staircase against :math:`Z_0`, summed column by column.
        Antisymmetric in the endpoints.

        Parameters
        ----------
        alpha : :py:class:`rank2_harmonic.value_group.BreveElement`
            Upper endpoint
        beta : :py:class:`rank2_harmonic.value_group.BreveElement`
            Lower endpoint

        Returns
        -------
        offset : int
            The offset
        """
        alpha, beta = as_breve(alpha), as_breve(beta)
        if alpha == beta:
            return 0
        if alpha < beta:
            return -self.offset(beta, alpha)
        return sum(_column_offset(self.height(n), lo, hi) for n, lo, hi in columns(alpha, beta))


Z0 = Staircase()


def columns(alpha, beta):
    """
    The columns of :math:`R_{\\alpha,\\beta} = \\{\\gamma : \\alpha > \\gamma
    \\ge \\beta\\}` for :math:`\\alpha \\ge \\beta`, as (n, lo, hi) with
    fiber range [lo, hi); None marks an unbounded side.
    """
    alpha, beta = as_breve(alpha), as_breve(beta)
    if alpha < beta:
        raise HarmonicError(f'Columns need alpha >= beta, got {alpha} < {beta}')
    n1, p1, n2, p2 = alpha.n, alpha.p, beta.n, beta.p
    if n1 == n2:
        return [] if p1 is None else [(n1, p2, p1)]
    out = [(n2, p2, None)]
    out.extend((n, None, None) for n in range(n2 + 1, n1))
    if p1 is not None:
        out.append((n1, None, p1))
    return out


def _column_offset(z, lo, hi):
    # |{p >= z} ∩ [lo, hi)| - |{p >= 0} ∩ [lo, hi)|
    if hi is None:
        return -z if lo is None else max(0, lo) - max(z, lo)

    def count(start):
        return max(0, hi - (start if lo is None else max(start, lo)))
    return count(z) - count(0)

##################################################################
##  TORSOR ELEMENTS
##################################################################

@dataclass(frozen=True)
class TorsorElement:
    """The element :math:`d_0^{\\alpha,\\beta} + t` of :math:`[\\alpha, \\beta]`"""
    alpha: BreveElement
    beta: BreveElement
    t: int = 0

    def __str__(self):
        return f'd0[{self.alpha},{self.beta}]{self.t:+d}'


def base_point(alpha, beta):
    return TorsorElement(as_breve(alpha), as_breve(beta), 0)


def torsor_compose(h1, h2):
    """
    The canonical isomorphism
    :math:`[\\alpha, \\beta] \\otimes [\\beta, \\gamma] \\to [\\alpha, \\gamma]`.

    Raises
    ------
    EndpointMismatchError
    """
    if h1.beta != h2.alpha:
        raise EndpointMismatchError(f'Cannot compose [{h1.alpha},{h1.beta}] with [{h2.alpha},{h2.beta}]')
    return TorsorElement(h1.alpha, h2.beta, h1.t + h2.t)


def torsor_inverse(h):
    """The inverse in the dual torsor, :math:`h \\otimes h^{-1} = 0`"""
    return TorsorElement(h.beta, h.alpha, -h.t)


def d_staircase(Z, b1, b2):
    """
    The element :math:`d_{Z,\\beta_1,\\beta_2}`, normalized by
    :math:`d(Z \\cap R_{\\beta_1,\\beta_2}) = 0`.
    """
    return TorsorElement(as_breve(b1), as_breve(b2), -Z.offset(b1, b2))


def gamma_shift(beta_, alpha, beta):
    """Coordinate shift of the action of :math:`\\beta' \\in \\Gamma` on :math:`[\\alpha, \\beta]`"""
    return Z0.translate(-beta_).offset(alpha, beta)


def gamma_act_torsor(beta_, h):
    """
    The action of :math:`\\beta' \\in \\Gamma`, mapping :math:`[\\alpha, \\beta]`
    to :math:`[\\beta' \\circ \\alpha, \\beta' \\circ \\beta]` by translation of
    sets.
    """
    return TorsorElement(circ(beta_, h.alpha), circ(beta_, h.beta),
                         h.t + gamma_shift(beta_, h.alpha, h.beta))


def calcul_shift(m, n1, n2):
    """:math:`\\frac{1}{2} m (n_1 + n_2 - 1)(n_1 - n_2)` in integer arithmetic"""
    return m * half_product(n1 + n2 - 1, n1 - n2)


def c_shift(m, alpha, beta):
    """Coordinate shift of :math:`m \\in C` on :math:`[\\alpha, \\beta]`"""
    alpha, beta = as_breve(alpha), as_breve(beta)
    if alpha.is_column and beta.is_column:
        return calcul_shift(m, alpha.n, beta.n)
    return Z0.shear(-m).offset(alpha, beta)


def c_act_torsor(m, h):
    """
    The action of :math:`m \\in C` by the shear of :math:`\\Gamma`, mapping
    :math:`[\\alpha, \\beta]` to :math:`[m \\diamond \\alpha, m \\diamond \\beta]`.
    """
    return TorsorElement(shear(m, h.alpha), shear(m, h.beta), h.t + c_shift(m, h.alpha, h.beta))


def kappa(alpha, beta, gamma):
    """
    Base point offset of the involution isomorphism
    :math:`[\\alpha, \\beta] \\to [\\alpha^{\\perp}, \\beta^{\\perp}]`.
    For :math:`\\alpha \\ge \\beta` the image of :math:`Z_0 \\cap R` is the
    height :math:`1 - \\gamma_2` staircase inside
    :math:`R_{\\beta^\\perp, \\alpha^\\perp}`.
    """
    return Staircase.constant(1 - gamma.p).offset(perp(beta, gamma), perp(alpha, gamma))


def perp_torsor(h, gamma):
    """
    The canonical isomorphism
    :math:`[\\alpha, \\beta] \\to [\\alpha^{\\perp(\\gamma)}, \\beta^{\\perp(\\gamma)}]`
    induced by :math:`A \\mapsto A^{\\perp,\\gamma}`.
    """
    return TorsorElement(perp(h.alpha, gamma), perp(h.beta, gamma),
                         h.t + kappa(h.alpha, h.beta, gamma))

##################################################################
##  LITERAL COUNTING
##################################################################

ColumnSet = namedtuple('ColumnSet', 'z added removed', defaults=(frozenset(), frozenset()))
ColumnSet.__doc__ = """
A subset of one column: the points p >= z (none if z is None) that are
not removed, together with the added points.
"""


def _in_column(cs, p):
    return (cs.z is not None and p >= cs.z and p not in cs.removed) or p in cs.added


def count_oracle(A, alpha, beta):
    """
    The value :math:`d_0^{\\alpha,\\beta}(A)` by literal signed counting of
    :math:`|A \\setminus Z_0| - |Z_0 \\setminus A|` inside
    :math:`R_{\\alpha,\\beta}`.

    Parameters
    ----------
    A : dict(int, :py:class:`ColumnSet`)
        The set per column; a missing column is empty
    alpha : :py:class:`rank2_harmonic.value_group.BreveElement`
        Upper endpoint
    beta : :py:class:`rank2_harmonic.value_group.BreveElement`
        Lower endpoint, alpha >= beta

    Returns
    -------
    d : int
        The signed count

    Raises
    ------
    NotEquivalentError
    """
    total = 0
    for n, lo, hi in columns(alpha, beta):
        cs = A.get(n, ColumnSet(None))

        # Points beyond the finite data agree or differ forever
        if hi is None and cs.z is None:
            raise NotEquivalentError(f'Column {n} of A is finite while Z0 is not')

        marks = [0, *cs.added, *cs.removed]
        marks.extend(x for x in (cs.z, lo, hi) if x is not None)
        for p in range(min(marks) - 1, max(marks) + 2):
            if (lo is not None and p < lo) or (hi is not None and p >= hi):
                continue
            total += int(_in_column(cs, p)) - int(p >= 0)
    return total


def staircase_set(Z, alpha, beta):
    """:math:`Z \\cap R_{\\alpha,\\beta}` as column sets"""
    return {n: ColumnSet(Z.height(n)) for n, _, _ in columns(alpha, beta)}


def translate_set(A, beta_):
    """The translate :math:`\\beta' + A` of a column description"""
    return {
        n + beta_.n: ColumnSet(None if cs.z is None else cs.z + beta_.p,
                               frozenset(p + beta_.p for p in cs.added),
                               frozenset(p + beta_.p for p in cs.removed))
        for n, cs in A.items()
    }


def shear_set(A, m):
    """The shear :math:`m \\diamond A` of a column description"""
    return {
        n: ColumnSet(None if cs.z is None else cs.z + m * n,
                     frozenset(p + m * n for p in cs.added),
                     frozenset(p + m * n for p in cs.removed))
        for n, cs in A.items()
    }


def perp_set(A, alpha, beta, gamma):
    """
    The set :math:`A^{\\perp,\\gamma} = R_{\\beta^\\perp,\\alpha^\\perp}
    \\setminus (-\\gamma - A)` for :math:`A \\subset R_{\\alpha,\\beta}`,
    column by column.

    Raises
    ------
    NotEquivalentError
    """
    out = {}
    for n, lo, hi in columns(alpha, beta):
        cs = A.get(n, ColumnSet(None))
        if cs.z is None:
            if hi is None:
                raise NotEquivalentError(f'Column {n} of A is finite while Z0 is not')
            # Every reflected point above the reflected range is in the complement
            z = -gamma.p - hi + 1
        else:
            z = 1 - gamma.p - cs.z
        out[-n - gamma.n] = ColumnSet(z,
                                      frozenset(-gamma.p - p for p in cs.removed - cs.added),
                                      frozenset(-gamma.p - p for p in cs.added))
    return out

##################################################################
##  MEASURE LINES
##################################################################

@dataclass(frozen=True)
class MeasureElement:
    """The element :math:`c \\cdot \\vartheta_r(d_0^{\\alpha,\\beta})` of :math:`\\mu_r(\\alpha, \\beta)`"""
    alpha: BreveElement
    beta: BreveElement
    c: Scalar

    def __str__(self):
        return f'({self.c})·mu[{self.alpha},{self.beta}]'


def base_measure(alpha, beta, c=1):
    return MeasureElement(as_breve(alpha), as_breve(beta), Scalar(c))


def fiber_measure(k, c=1):
    """The measure :math:`c \\cdot \\eta_k` on :math:`[(k+1, -\\infty), (k, -\\infty)]`"""
    return base_measure(BreveElement.column(k + 1), BreveElement.column(k), c)


def theta(h):
    """:math:`\\vartheta_r(d_0 + t) = r^t \\cdot` base"""
    return MeasureElement(h.alpha, h.beta, r_power(h.t))


def mu_tensor(m1, m2):
    """
    The canonical isomorphism
    :math:`\\mu_r(\\alpha, \\beta) \\otimes \\mu_r(\\beta, \\gamma) \\to \\mu_r(\\alpha, \\gamma)`.

    Raises
    ------
    EndpointMismatchError
    """
    if m1.beta != m2.alpha:
        raise EndpointMismatchError(f'Cannot tensor mu[{m1.alpha},{m1.beta}] with mu[{m2.alpha},{m2.beta}]')
    return MeasureElement(m1.alpha, m2.beta, m1.c * m2.c)


def mu_inverse(m):
    """
    The inverse in :math:`\\mu_r(\\beta, \\alpha)`.

    Raises
    ------
    ZeroMeasureError
    """
    if m.c.is_zero:
        raise ZeroMeasureError(f'Inverse of the zero measure on [{m.alpha},{m.beta}]')
    return MeasureElement(m.beta, m.alpha, m.c.inv())


def mu_scale(m, s):
    return MeasureElement(m.alpha, m.beta, m.c * s)


def mu_fiber_value(eta, p):
    """
    The value :math:`\\eta(x)` of a measure on the fiber
    :math:`\\pi^{-1}(k)` at the point (k, p), i.e. :math:`c \\cdot r^{-p}`.

    Raises
    ------
    EndpointMismatchError
    """
    k = eta.beta.n
    validate_endpoints(eta, BreveElement.column(k + 1), BreveElement.column(k), 'fiber measure')
    return eta.c * r_power(-p)


def mu_perp(m, gamma):
    """The isomorphism :math:`\\mu_r(\\alpha, \\beta) \\to \\mu_r(\\alpha^\\perp, \\beta^\\perp)`"""
    return MeasureElement(perp(m.alpha, gamma), perp(m.beta, gamma),
                          m.c * r_power(kappa(m.alpha, m.beta, gamma)))


def mu_gamma_act(beta_, m):
    """The action of :math:`\\beta' \\in \\Gamma` on measure lines"""
    return MeasureElement(circ(beta_, m.alpha), circ(beta_, m.beta),
                          m.c * r_power(gamma_shift(beta_, m.alpha, m.beta)))


def mu_c_act(k, m):
    """The action of :math:`k \\in C` on measure lines"""
    return MeasureElement(shear(k, m.alpha), shear(k, m.beta),
                          m.c * r_power(c_shift(k, m.alpha, m.beta)))
