"""
The rank-2 value group :math:`\\Gamma = \\mathbb{Z} \\oplus \\mathbb{Z}` with
projection :math:`\\pi(n, p) = n`, the ordered set
:math:`\\breve{\\Gamma} = \\Gamma \\cup \\pi(\\Gamma)`, the :math:`\\circ`
operation, the shear action of :math:`C = \\mathbb{Z}` and the involution
:math:`\\perp(\\gamma)`.

Coordinates are relative to the standard section :math:`n \\mapsto (n, 0)`.
"""
import functools
from dataclasses import dataclass
from typing import Optional

from .validation import HarmonicError


@dataclass(frozen=True)
class GammaElement:
    """An element (n, p) of :math:`\\Gamma`"""
    n: int
    p: int

    def __add__(self, other):
        return GammaElement(self.n + other.n, self.p + other.p)

    def __sub__(self, other):
        return GammaElement(self.n - other.n, self.p - other.p)

    def __neg__(self):
        return GammaElement(-self.n, -self.p)

    def __str__(self):
        return f'({self.n},{self.p})'


@functools.total_ordering
@dataclass(frozen=True, eq=True)
class BreveElement:
    """
    A point of :math:`\\breve{\\Gamma}`. A fiber coordinate of None stands
    for the point :math:`(n, -\\infty) \\in \\pi(\\Gamma)`, which lies below
    every point of its column.
    """
    n: int
    p: Optional[int] = None

    @classmethod
    def column(cls, n):
        """The point :math:`(n, -\\infty)`"""
        return cls(n, None)

    @classmethod
    def point(cls, n, p):
        return cls(n, p)

    @property
    def is_column(self):
        return self.p is None

    def _key(self):
        return (self.n, self.p is not None, self.p if self.p is not None else 0)

    def __lt__(self, other):
        if not isinstance(other, BreveElement):
            return NotImplemented
        return self._key() < other._key()

    def to_gamma(self):
        """
        The underlying element of :math:`\\Gamma`.

        Raises
        ------
        HarmonicError
        """
        if self.p is None:
            raise HarmonicError(f'{self} is not an element of Gamma')
        return GammaElement(self.n, self.p)

    def __str__(self):
        return f'({self.n},{"-inf" if self.p is None else self.p})'


ALPHA0 = BreveElement.column(0)


def as_breve(x):
    """Promote a GammaElement to the corresponding BreveElement"""
    if isinstance(x, GammaElement):
        return BreveElement(x.n, x.p)
    return x


def compare(a, b):
    """
    Compare two points of :math:`\\breve{\\Gamma}`.

    Returns
    -------
    out : int
        -1, 0 or 1
    """
    a, b = as_breve(a), as_breve(b)
    return (a > b) - (a < b)


def circ(a, b):
    """
    The commutative extension of the group law to
    :math:`\\breve{\\Gamma}`; a :math:`-\\infty` fiber is absorbing.
    """
    a, b = as_breve(a), as_breve(b)
    if a.p is None or b.p is None:
        return BreveElement.column(a.n + b.n)
    return BreveElement(a.n + b.n, a.p + b.p)


def shear(k, b):
    """
    The action :math:`k \\diamond (n, p) = (n, kn + p)`, fixing
    :math:`(n, -\\infty)`.
    """
    if isinstance(b, GammaElement):
        return GammaElement(b.n, k * b.n + b.p)
    if b.p is None:
        return b
    return BreveElement(b.n, k * b.n + b.p)


def perp(b, gamma):
    """
    The involution :math:`\\beta \\mapsto \\beta^{\\perp(\\gamma)}`, the minimum
    of all :math:`\\phi \\in \\breve{\\Gamma}` with
    :math:`\\phi \\circ \\beta \\circ \\gamma > 0`, in closed form.

    Parameters
    ----------
    b : :py:class:`BreveElement`
        The point to reflect
    gamma : :py:class:`GammaElement`
        The parameter of the involution

    Returns
    -------
    out : :py:class:`BreveElement`
        :math:`(-a-\\gamma_1, -b-\\gamma_2+1)` for a point (a, b) and
        :math:`(-n-\\gamma_1+1, -\\infty)` for a column point.
    """
    b = as_breve(b)
    if b.p is None:
        return BreveElement.column(-b.n - gamma.n + 1)
    return BreveElement(-b.n - gamma.n, -b.p - gamma.p + 1)


def brute_force_perp(b, gamma, radius=6):
    """
    Search the minimum :math:`\\phi` with :math:`\\phi \\circ \\beta \\circ
    \\gamma > 0` over a window of candidates around the closed form. Only
    used to validate :py:func:`perp`.
    """
    b = as_breve(b)
    zero = BreveElement(0, 0)
    centre = perp(b, gamma)
    candidates = []
    for n in range(centre.n - radius, centre.n + radius + 1):
        candidates.append(BreveElement.column(n))
        for p in range(-2 * radius - abs(b.p or 0) - abs(gamma.p), 2 * radius + abs(b.p or 0) + abs(gamma.p) + 1):
            candidates.append(BreveElement(n, p))
    valid = [phi for phi in candidates if circ(circ(phi, b), gamma) > zero]
    return min(valid)
