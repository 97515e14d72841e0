"""
A finite exact model of the local field :math:`L = \\mathbb{F}_p((u))`.

Functions are tabulated on the cosets of :math:`m^m` inside :math:`m^n`
for a window :math:`-M \\le n \\le m \\le M`. A coset is identified by the
digits of its representative :math:`\\sum_i d_i u^{n+i}`, indexed
little-endian as :math:`\\sum_i d_i p^i`. The Haar measure is normalized by
:math:`\\mu(O_L) = 1`, so every coset has mass :math:`p^{-m}`, and the
character is :math:`\\psi(x) = \\zeta_p^{x}`.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Tuple

import numpy as np

from .fourier import fourier_fiber_fn, reflected_fiber
from .rank1 import RankOneDistribution, RankOneFunction, g_r
from .report import check
from .scalar import CyclotomicScalar, Scalar
from .torsor import fiber_measure
from .utils import character_sum
from .validation import (
    HarmonicError, NotInvariantError, WindowOverflowError, validate_prime
)

logger = logging.getLogger(__name__)


def _power(p, e):
    """Exact :math:`p^e` for any integer e"""
    return Fraction(p) ** e

##################################################################
##  TRUNCATED LAURENT SERIES
##################################################################

@dataclass(frozen=True)
class TruncatedLaurent:
    """
    A Laurent series over :math:`\\mathbb{F}_p` known modulo :math:`u^M`, with
    coefficients for the exponents -M..M-1.
    """
    p: int
    M: int
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != 2 * self.M:
            raise HarmonicError(f'Expected {2 * self.M} coefficients, got {len(self.coeffs)}')
        object.__setattr__(self, 'coeffs', tuple(int(c) % self.p for c in self.coeffs))

    @classmethod
    def zero(cls, p, M):
        return cls(p, M, (0,) * (2 * M))

    @classmethod
    def from_dict(cls, p, M, terms):
        """
        Build :math:`\\sum c_j u^j` from {j: c_j}. Exponents at or above M are
        dropped.

        Raises
        ------
        WindowOverflowError
        """
        coeffs = [0] * (2 * M)
        for j, c in terms.items():
            if c % p == 0 or j >= M:
                continue
            if j < -M:
                raise WindowOverflowError(f'Exponent {j} is below the window -{M}')
            coeffs[j + M] = c
        return cls(p, M, tuple(coeffs))

    @classmethod
    def monomial(cls, p, M, j, c=1):
        return cls.from_dict(p, M, {j: c})

    def coefficient(self, j):
        if j < -self.M or j >= self.M:
            return 0
        return self.coeffs[j + self.M]

    @property
    def valuation(self):
        """Least exponent with a nonzero coefficient, infinity for zero"""
        for i, c in enumerate(self.coeffs):
            if c:
                return i - self.M
        return float('inf')

    def residue(self):
        """The coefficient of :math:`u^{-1}`"""
        return self.coefficient(-1)

    def _like(self, other):
        if (other.p, other.M) != (self.p, self.M):
            raise HarmonicError(f'Series over F_{other.p} mod u^{other.M} and F_{self.p} mod u^{self.M}')

    def __add__(self, other):
        self._like(other)
        return TruncatedLaurent(self.p, self.M, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return TruncatedLaurent(self.p, self.M, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        """
        Raises
        ------
        WindowOverflowError
        """
        self._like(other)
        conv = np.convolve(np.array(self.coeffs, dtype=np.int64), np.array(other.coeffs, dtype=np.int64)) % self.p
        # conv[t] is the coefficient of u^{t - 2M}
        terms = {t - 2 * self.M: int(c) for t, c in enumerate(conv) if c}
        return TruncatedLaurent.from_dict(self.p, self.M, terms)

    def __str__(self):
        terms = [f'{c}*u^{j}' for j, c in ((i - self.M, c) for i, c in enumerate(self.coeffs)) if c]
        return ' + '.join(terms) or '0'


def local_pairing(a, b, v):
    """
    The pairing :math:`\\langle a, b \\rangle_\\omega = \\mathrm{res}(a b \\omega)`
    for :math:`\\omega = u^v du`, read off coefficient by coefficient.
    """
    return sum(a.coefficient(i) * b.coefficient(-1 - v - i) for i in range(-a.M, a.M)) % a.p


def psi(p, x):
    """The character :math:`\\psi(x) = \\zeta_p^x` of :math:`\\mathbb{F}_p`"""
    return CyclotomicScalar.zeta(p, int(x) % p)

##################################################################
##  FINITE FUNCTIONS
##################################################################

@lru_cache(maxsize=None)
def digits_table(p, L):
    """
    The little-endian digits of all :math:`p^L` coset indices.

    Returns
    -------
    digits : np.array(2d)
        An int64 array of shape (p^L, L)
    """
    idx = np.arange(p ** L, dtype=np.int64)
    out = np.empty((p ** L, L), dtype=np.int64)
    for i in range(L):
        out[:, i] = (idx // p ** i) % p
    return out


def index_of_digits(digits, p):
    """Coset indices of digit rows"""
    weights = p ** np.arange(digits.shape[1], dtype=np.int64)
    return digits @ weights


def _as_cyclotomic(p, v):
    if isinstance(v, CyclotomicScalar):
        return v
    if isinstance(v, Scalar):
        v = v.to_fraction()
    return CyclotomicScalar.rational(p, v)


@dataclass(frozen=True, eq=False)
class FiniteFunction:
    """
    A locally constant function supported in :math:`m^n` and constant on
    :math:`m^m`-cosets, with one value per coset.
    """
    p: int
    M: int
    n: int
    m: int
    values: Tuple[CyclotomicScalar, ...]

    def __post_init__(self):
        validate_prime(self.p)
        if not -self.M <= self.n <= self.m <= self.M:
            raise WindowOverflowError(f'Window ({self.n}, {self.m}) exceeds [-{self.M}, {self.M}]')
        if len(self.values) != self.p ** (self.m - self.n):
            raise HarmonicError(f'Expected {self.p ** (self.m - self.n)} values, got {len(self.values)}')
        object.__setattr__(self, 'values', tuple(_as_cyclotomic(self.p, v) for v in self.values))

    @property
    def width(self):
        return self.m - self.n

    @classmethod
    def indicator(cls, p, M, j, n=None, m=None):
        """
        The characteristic function :math:`\\delta_{m^j}` on the window
        (n, m), by default (j, j).
        """
        n = j if n is None else n
        m = j if m is None else m
        if not n <= j <= m:
            raise HarmonicError(f'Cannot resolve m^{j} on the window ({n}, {m})')
        digits = digits_table(p, m - n)
        inside = ~np.any(digits[:, :j - n] != 0, axis=1)
        return cls(p, M, n, m, tuple(int(b) for b in inside))

    @classmethod
    def from_shells(cls, p, M, n, m, shells, zero_value=0):
        """
        The unit-invariant function with value shells[j] on
        :math:`O^*(j) = u^j O_L^*` for n <= j < m and zero_value on
        :math:`m^m`.
        """
        vals = shell_index(p, n, m)
        table = {**{j: shells.get(j, 0) for j in range(n, m)}, m: zero_value}
        return cls(p, M, n, m, tuple(table[int(j)] for j in vals))

    def __call__(self, x):
        """The value at a point given as a :py:class:`TruncatedLaurent`"""
        if x.valuation < self.n:
            return CyclotomicScalar.rational(self.p, 0)
        idx = sum(x.coefficient(self.n + i) * self.p ** i for i in range(self.width))
        return self.values[idx]

    def rewindow(self, n, m):
        """
        The same function tabulated on a window (n, m) containing this one.
        """
        if n > self.n or m < self.m:
            raise HarmonicError(f'Window ({n}, {m}) does not contain ({self.n}, {self.m})')
        digits = digits_table(self.p, m - n)
        outside = np.any(digits[:, :self.n - n] != 0, axis=1)
        old = index_of_digits(digits[:, self.n - n:self.m - n], self.p)
        zero = CyclotomicScalar.rational(self.p, 0)
        return FiniteFunction(self.p, self.M, n, m,
                              tuple(zero if out else self.values[i] for out, i in zip(outside, old)))

    def _common(self, other):
        n, m = min(self.n, other.n), max(self.m, other.m)
        return self.rewindow(n, m), other.rewindow(n, m)

    def __add__(self, other):
        a, b = self._common(other)
        return FiniteFunction(a.p, a.M, a.n, a.m, tuple(x + y for x, y in zip(a.values, b.values)))

    def scale(self, c):
        return FiniteFunction(self.p, self.M, self.n, self.m, tuple(v * c for v in self.values))

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, FiniteFunction):
            return NotImplemented
        a, b = self._common(other)
        return a.values == b.values

    __hash__ = None

    def reflect(self):
        """The function :math:`x \\mapsto f(-x)`"""
        digits = digits_table(self.p, self.width)
        idx = index_of_digits((-digits) % self.p, self.p)
        return FiniteFunction(self.p, self.M, self.n, self.m, tuple(self.values[i] for i in idx))

    def scale_by_unit(self, unit):
        """
        The function :math:`x \\mapsto f(\\varepsilon x)` for a unit
        :math:`\\varepsilon \\in O_L^*`.

        Raises
        ------
        HarmonicError
        """
        if unit.valuation != 0:
            raise HarmonicError(f'{unit} is not a unit')
        L = self.width
        T = np.zeros((L, L), dtype=np.int64)
        for i in range(L):
            for t in range(i, L):
                T[i, t] = unit.coefficient(t - i)
        digits = digits_table(self.p, L)
        idx = index_of_digits((digits @ T) % self.p, self.p)
        return FiniteFunction(self.p, self.M, self.n, self.m, tuple(self.values[i] for i in idx))

    def u_translate(self):
        """
        The function :math:`x \\mapsto f(u^{-1} x)`, supported in
        :math:`m^{n+1}`.

        Raises
        ------
        WindowOverflowError
        """
        return FiniteFunction(self.p, self.M, self.n + 1, self.m + 1, self.values)

    def __str__(self):
        return f'f[F_{self.p}; m^{self.n}/m^{self.m}]({", ".join(map(str, self.values))})'


def shell_index(p, n, m):
    """
    The valuation of every coset of :math:`m^n / m^m`, with m standing for
    the zero coset.
    """
    if m == n:
        return np.full(1, m, dtype=np.int64)
    digits = digits_table(p, m - n)
    nonzero = digits != 0
    first = np.where(nonzero.any(axis=1), nonzero.argmax(axis=1), m - n)
    return n + first


def coset_point(f, idx):
    """The representative of coset idx as a :py:class:`TruncatedLaurent`"""
    digits = digits_table(f.p, f.width)[idx]
    return TruncatedLaurent.from_dict(f.p, f.M, {f.n + i: int(d) for i, d in enumerate(digits)})


def invariant_functions(p, M, n, m, values=(0, 1)):
    """Every unit-invariant function on the window (n, m) with shell values from `values`"""
    for assignment in product(values, repeat=m - n + 1):
        shells = dict(zip(range(n, m), assignment[:-1]))
        yield FiniteFunction.from_shells(p, M, n, m, shells, assignment[-1])

##################################################################
##  INTEGRATION AND FOURIER
##################################################################

def haar_integral(f):
    """
    The integral :math:`\\int f d\\mu` with :math:`\\mu(O_L) = 1`.

    Returns
    -------
    out : :py:class:`rank2_harmonic.scalar.CyclotomicScalar`
        The exact value
    """
    total = CyclotomicScalar.rational(f.p, 0)
    for v in f.values:
        total = total + v
    return total * _power(f.p, -f.m)


def _numerators(values, p):
    # Common integer numerators of the unreduced vectors
    vectors = [v.vector() for v in values]
    den = int(np.lcm.reduce(np.array([c.denominator for vec in vectors for c in vec], dtype=np.int64)))
    num = np.array([[int(c * den) for c in vec] for vec in vectors], dtype=np.int64)
    return num, den


def fourier_local(f, v):
    """
    The Fourier transform
    :math:`F(f)(y) = \\int f(x) \\psi(-\\mathrm{res}(x y \\omega)) d\\mu(x)` for
    :math:`\\omega = u^v du`. A function on the window (n, m) transforms to
    one on (-m-v, -n-v).

    Parameters
    ----------
    f : :py:class:`FiniteFunction`
        The input
    v : int
        The valuation of :math:`\\omega`

    Returns
    -------
    out : :py:class:`FiniteFunction`
        The transform

    Raises
    ------
    WindowOverflowError
    """
    p, M = f.p, f.M
    n2, m2 = -f.m - v, -f.n - v
    if n2 < -M or m2 > M:
        raise WindowOverflowError(f'Transform window ({n2}, {m2}) exceeds [-{M}, {M}]')

    # res(x y omega) pairs digit i of x with digit L-1-i of y
    digits = digits_table(p, f.width)
    E = (digits[:, ::-1] @ digits.T) % p
    num, den = _numerators(f.values, p)
    sums = character_sum((-E) % p, num, p)

    mass = _power(p, -f.m) / den
    values = tuple(CyclotomicScalar.from_vector(p, [Fraction(int(c)) * mass for c in row]) for row in sums)
    logger.debug('Fourier transform on F_%d: (%d, %d) -> (%d, %d)', p, f.n, f.m, n2, m2)
    return FiniteFunction(p, M, n2, m2, values)


def fourier_local_literal(f, v):
    """
    The same transform summed point by point through
    :py:func:`local_pairing`. Only used to validate :py:func:`fourier_local`.
    """
    p, M = f.p, f.M
    n2, m2 = -f.m - v, -f.n - v
    target = FiniteFunction(p, M, n2, m2, (0,) * p ** (f.m - f.n))
    mass = _power(p, -f.m)
    out = []
    for iy in range(len(target.values)):
        y = coset_point(target, iy)
        total = CyclotomicScalar.rational(p, 0)
        for ix, value in enumerate(f.values):
            if not value.is_zero:
                total = total + value * psi(p, -local_pairing(coset_point(f, ix), y, v))
        out.append(total * mass)
    return FiniteFunction(p, M, n2, m2, tuple(out))

##################################################################
##  COINVARIANT MAPS
##################################################################

def _rational(value):
    return Scalar(value.to_rational())


def _shell_values(f, strict):
    shells = shell_index(f.p, f.n, f.m)
    out = {}
    for j in range(f.n, f.m + 1):
        vals = [f.values[i] for i in np.flatnonzero(shells == j)]
        if strict:
            if any(v != vals[0] for v in vals[1:]):
                raise NotInvariantError(f'{f} is not constant on the shell of valuation {j}')
            out[j] = vals[0]
        else:
            total = CyclotomicScalar.rational(f.p, 0)
            for v in vals:
                total = total + v
            out[j] = total * Fraction(1, len(vals))
    return out


def is_invariant(f):
    try:
        _shell_values(f, True)
    except NotInvariantError:
        return False
    return True


def i_map(f, k=0):
    """
    The map :math:`i(f): n \\mapsto f(u^n)` on unit-invariant functions.

    Raises
    ------
    NotInvariantError, NotRationalError
    """
    shells = _shell_values(f, True)
    return RankOneFunction(k, f.n, tuple(_rational(shells[j]) for j in range(f.n, f.m)),
                           _rational(shells[f.m]))


def j_map(f, k=0):
    """
    The coinvariant map: the average of f over each shell
    :math:`O^*(n) = u^n O_L^*`.

    Raises
    ------
    NotRationalError
    """
    shells = _shell_values(f, False)
    return RankOneFunction(k, f.n, tuple(_rational(shells[j]) for j in range(f.n, f.m)),
                           _rational(shells[f.m]))


def dist_images(kind, p, M, k=0):
    """
    The rank-1 distribution induced by a functional on :math:`D(L)`,
    read off as :math:`a_x = T(\\delta_{m^x})` for :math:`|x| \\le M`.

    Parameters
    ----------
    kind : str
        ``delta0`` (the Dirac delta at 0), ``haar`` (the Haar integral with
        :math:`\\mu(O_L) = 1`) or ``g_q`` (the discrete :math:`g_r` at r = p)
    p : int
        The residue characteristic
    M : int
        The window radius

    Returns
    -------
    out : :py:class:`rank2_harmonic.rank1.RankOneDistribution`
        The image on fiber k
    """
    if kind == 'g_q':
        return g_r(k).specialize(p)
    if kind == 'delta0':
        zero = TruncatedLaurent.zero(p, M)
        values = [FiniteFunction.indicator(p, M, x)(zero).to_rational() for x in range(-M, M + 1)]
    elif kind == 'haar':
        values = [haar_integral(FiniteFunction.indicator(p, M, x)).to_rational() for x in range(-M, M + 1)]
    else:
        raise HarmonicError(f'Unknown distribution image {kind!r}')
    return RankOneDistribution.from_window(k, -M, [Scalar(v) for v in values])


def haar_shell_masses(p, M):
    """:math:`\\mu(O^*(y))` for -M <= y < M, integrated on the finite model"""
    return {y: haar_integral(FiniteFunction.indicator(p, M, y, y, y + 1)
                             - FiniteFunction.indicator(p, M, y + 1, y, y + 1)).to_rational()
            for y in range(-M, M)}

##################################################################
##  LAYER DIAGRAM
##################################################################

def layer_diagram_check(k, gamma, p, M, rng=None, extra=2):
    """
    Check that the coinvariants of the layer Fourier transform agree with
    the discrete fiber transform: :math:`j(F f) = F_{\\eta_k}(j f)` at r = p,
    where :math:`\\omega` has valuation :math:`\\gamma_2 - 1` so that the
    local duality reflects like :math:`\\perp(\\gamma)`.

    The inputs are :math:`\\delta_{m^j}` for every j whose transform fits the
    window, plus `extra` random unit-invariant combinations.

    Returns
    -------
    checks : list(:py:class:`rank2_harmonic.report.Check`)
        One check per input
    """
    validate_prime(p)
    rng = np.random.default_rng(0) if rng is None else rng
    v = gamma.p - 1
    lo, hi = max(-M, -M - v), min(M, M - v)
    if lo > hi:
        raise WindowOverflowError(f'No layer inputs fit [-{M}, {M}] for omega of valuation {v}')
    eta = fiber_measure(k)

    inputs = [(f'delta m^{j}', FiniteFunction.indicator(p, M, j)) for j in range(lo, hi + 1)]
    for t in range(extra):
        shells = {j: int(c) for j, c in zip(range(lo, hi), rng.integers(-3, 4, size=hi - lo))}
        inputs.append((f'random {t}', FiniteFunction.from_shells(p, M, lo, hi, shells, int(rng.integers(-3, 4)))))

    checks = []
    for name, f in inputs:
        left = j_map(fourier_local(f, v), reflected_fiber(k, gamma))
        right = fourier_fiber_fn(j_map(f, k), gamma, eta).specialize(p)
        checks.append(check(f'layer k={k} gamma={gamma} p={p}: {name}', left == right,
                            {'coinvariant_of_transform': str(left), 'transform_of_coinvariant': str(right)}))
    logger.info('Layer diagram k=%d gamma=%s p=%d M=%d: %d/%d agree', k, gamma, p, M,
                sum(c.status == 'pass' for c in checks), len(checks))
    return checks
