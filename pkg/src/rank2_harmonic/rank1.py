"""
The spaces :math:`D_+(T)` and :math:`D'_+(T)` on a Z-fiber
:math:`T = \\pi^{-1}(k)`, their pairing, canonical elements and translation.

Functions vanish far below and are eventually constant above. They expand
in the basis :math:`\\delta_{\\ge p}` with coefficients
:math:`c_p = f(p) - f(p-1)`. Distributions are given by their diagonal
values :math:`a_x = a_{x,x}` and are represented by the bi-geometric class:
finite sums of geometric sequences below ``xlo`` and above ``xhi`` with
explicit values in between.
"""
from dataclasses import dataclass
from typing import Tuple

from .scalar import ONE, ZERO, RPARAM, Scalar, as_scalar
from .validation import HarmonicError, validate_fiber

##################################################################
##  FUNCTIONS
##################################################################

@dataclass(frozen=True)
class RankOneFunction:
    """
    A function on fiber k with f(p) = 0 for p < base,
    f(base + i) = values[i] and f(p) = tail for p >= base + len(values).
    Instances are canonical: values[0] != 0 and values[-1] != tail, the zero
    function has base 0.
    """
    k: int
    base: int
    values: Tuple[Scalar, ...]
    tail: Scalar

    def __post_init__(self):
        values = [as_scalar(v) for v in self.values]
        tail = as_scalar(self.tail)
        base = self.base
        while values and values[-1] == tail:
            values.pop()
        while values and values[0].is_zero:
            values.pop(0)
            base += 1
        if not values and tail.is_zero:
            base = 0
        object.__setattr__(self, 'values', tuple(values))
        object.__setattr__(self, 'tail', tail)
        object.__setattr__(self, 'base', base)

    @classmethod
    def zero(cls, k):
        return cls(k, 0, (), ZERO)

    @classmethod
    def from_coefficients(cls, k, coeffs):
        """
        Build :math:`\\sum_p c_p \\delta_{\\ge p}` from a dict {p: c_p}.
        """
        coeffs = {p: as_scalar(c) for p, c in coeffs.items() if not as_scalar(c).is_zero}
        if not coeffs:
            return cls.zero(k)
        lo, hi = min(coeffs), max(coeffs)
        values, acc = [], ZERO
        for p in range(lo, hi + 1):
            acc = acc + coeffs.get(p, ZERO)
            values.append(acc)
        return cls(k, lo, tuple(values), acc)

    @property
    def is_zero(self):
        return not self.values and self.tail.is_zero

    def __call__(self, p):
        if p < self.base:
            return ZERO
        i = p - self.base
        return self.values[i] if i < len(self.values) else self.tail

    def coefficients(self):
        """The nonzero basis coefficients {p: c_p}"""
        out = {}
        for p in range(self.base, self.base + len(self.values) + 1):
            c = self(p) - self(p - 1)
            if not c.is_zero:
                out[p] = c
        return out

    def support_end(self):
        """First position from which f is constant"""
        return self.base + len(self.values)

    def __add__(self, other):
        validate_fiber(other, self.k, 'summand')
        coeffs = self.coefficients()
        for p, c in other.coefficients().items():
            coeffs[p] = coeffs.get(p, ZERO) + c
        return RankOneFunction.from_coefficients(self.k, coeffs)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = as_scalar(c)
        return RankOneFunction(self.k, self.base, tuple(v * c for v in self.values), self.tail * c)

    def on_fiber(self, k):
        """The same values on another fiber"""
        return RankOneFunction(k, self.base, self.values, self.tail)

    def specialize(self, q):
        """The function with every value evaluated at r = q"""
        return RankOneFunction(self.k, self.base,
                               tuple(Scalar(v.eval_at(q)) for v in self.values),
                               Scalar(self.tail.eval_at(q)))

    def __str__(self):
        return f'f@{self.k}[{self.base}: {", ".join(map(str, self.values))} | {self.tail}]'


def delta_geq(p, k=0):
    """:math:`\\delta_{\\ge p}` on fiber k"""
    return RankOneFunction(k, p, (), ONE)


def delta_infty_of(f):
    """:math:`\\delta_{+\\infty}(f)`, the tail constant"""
    return f.tail

##################################################################
##  DISTRIBUTIONS
##################################################################

def _tail(pairs):
    acc = {}
    for ratio, coeff in (pairs.items() if isinstance(pairs, dict) else pairs):
        ratio, coeff = as_scalar(ratio), as_scalar(coeff)
        if ratio.is_zero:
            raise HarmonicError('Geometric tails need nonzero ratios')
        acc[ratio] = acc.get(ratio, ZERO) + coeff
    return tuple(sorted(((q, c) for q, c in acc.items() if not c.is_zero), key=lambda t: str(t[0])))


@dataclass(frozen=True, eq=False)
class RankOneDistribution:
    """
    A distribution on fiber k with diagonal values

    * :math:`a_x = \\sum e \\rho^{-x}` over the lower pairs (ρ, e) for x <= xlo,
    * ``middle[x - xlo - 1]`` for xlo < x < xhi,
    * :math:`a_x = \\sum d \\sigma^{x}` over the upper pairs (σ, d) for x >= xhi.

    Equality is equality of sequences.
    """
    k: int
    xlo: int
    lower: Tuple[Tuple[Scalar, Scalar], ...]
    middle: Tuple[Scalar, ...]
    xhi: int
    upper: Tuple[Tuple[Scalar, Scalar], ...]

    def __post_init__(self):
        if self.xhi - self.xlo != len(self.middle) + 1:
            raise HarmonicError(f'Middle has {len(self.middle)} values for ({self.xlo}, {self.xhi})')
        lower, upper = _tail(self.lower), _tail(self.upper)
        middle = [as_scalar(v) for v in self.middle]
        xlo, xhi = self.xlo, self.xhi

        # Absorb middle values into the tails
        while middle and middle[-1] == _geometric(upper, xhi - 1, 1):
            middle.pop()
            xhi -= 1
        while middle and middle[0] == _geometric(lower, xlo + 1, -1):
            middle.pop(0)
            xlo += 1

        object.__setattr__(self, 'lower', lower)
        object.__setattr__(self, 'upper', upper)
        object.__setattr__(self, 'middle', tuple(middle))
        object.__setattr__(self, 'xlo', xlo)
        object.__setattr__(self, 'xhi', xhi)

    @classmethod
    def zero(cls, k):
        return cls(k, 0, (), (), 1, ())

    @classmethod
    def from_window(cls, k, start, values):
        """
        Fit a distribution to the explicit values on
        [start, start + len(values)), continued geometrically from the two
        outermost values on each side.
        """
        values = [as_scalar(v) for v in values]
        if len(values) < 2:
            raise HarmonicError('Need at least two values to continue a window')
        end = start + len(values) - 1

        def side(a, b, x, sign):
            # a at x, b one step inwards; a_y = a * rho^{sign*(x - y)}
            if a.is_zero:
                return ()
            if b.is_zero:
                raise HarmonicError('Cannot continue a geometric tail through zero')
            ratio = a / b
            return ((ratio, a / ratio ** (sign * x)),)

        upper = side(values[-1], values[-2], end, 1)
        lower = side(values[0], values[1], start, -1)
        return cls(k, start, lower, tuple(values[1:-1]), end, upper)

    def __call__(self, x):
        if x <= self.xlo:
            return _geometric(self.lower, x, -1)
        if x >= self.xhi:
            return _geometric(self.upper, x, 1)
        return self.middle[x - self.xlo - 1]

    @property
    def is_zero(self):
        return not self.lower and not self.upper and all(v.is_zero for v in self.middle)

    def delta_plus_component(self):
        """The coefficient of :math:`\\delta_{+\\infty}`: the ratio-1 part of the upper tail"""
        return dict(self.upper).get(ONE, ZERO)

    def __eq__(self, other):
        if not isinstance(other, RankOneDistribution):
            return NotImplemented
        if self.k != other.k or dict(self.lower) != dict(other.lower) or dict(self.upper) != dict(other.upper):
            return False
        lo, hi = min(self.xlo, other.xlo), max(self.xhi, other.xhi)
        return all(self(x) == other(x) for x in range(lo, hi + 1))

    def __hash__(self):
        return hash((self.k, frozenset(self.lower), frozenset(self.upper)))

    ##################################################
    # LINEAR STRUCTURE
    ##################################################

    def __add__(self, other):
        validate_fiber(other, self.k, 'summand')
        xlo, xhi = min(self.xlo, other.xlo), max(self.xhi, other.xhi)
        return RankOneDistribution(
            self.k, xlo, self.lower + other.lower,
            tuple(self(x) + other(x) for x in range(xlo + 1, xhi)),
            xhi, self.upper + other.upper
        )

    def scale(self, c):
        c = as_scalar(c)
        return RankOneDistribution(
            self.k, self.xlo, tuple((q, e * c) for q, e in self.lower),
            tuple(v * c for v in self.middle), self.xhi, tuple((q, d * c) for q, d in self.upper)
        )

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def on_fiber(self, k):
        return RankOneDistribution(k, self.xlo, self.lower, self.middle, self.xhi, self.upper)

    def reflect(self, s, k=None):
        """The sequence :math:`b_y = a_{s-y}`, optionally on another fiber"""
        return RankOneDistribution(
            self.k if k is None else k, s - self.xhi,
            tuple((q, d * q ** s) for q, d in self.upper),
            tuple(reversed(self.middle)), s - self.xlo,
            tuple((q, e * q ** (-s)) for q, e in self.lower)
        )

    def mul_geometric(self, c, ratio):
        """Pointwise product with :math:`y \\mapsto c \\cdot q^{-y}`"""
        c, ratio = as_scalar(c), as_scalar(ratio)
        return RankOneDistribution(
            self.k, self.xlo, tuple((q * ratio, e * c) for q, e in self.lower),
            tuple(v * c * ratio ** (-x) for x, v in enumerate(self.middle, self.xlo + 1)),
            self.xhi, tuple((q / ratio, d * c) for q, d in self.upper)
        )

    def specialize(self, q):
        """The distribution with every scalar evaluated at r = q"""
        def ev(s):
            return Scalar(s.eval_at(q))
        return RankOneDistribution(
            self.k, self.xlo, tuple((ev(a), ev(b)) for a, b in self.lower),
            tuple(ev(v) for v in self.middle), self.xhi,
            tuple((ev(a), ev(b)) for a, b in self.upper)
        )

    def __str__(self):
        return (f'a@{self.k}[<= {self.xlo}: {_tail_text(self.lower)} | '
                f'{", ".join(map(str, self.middle))} | >= {self.xhi}: {_tail_text(self.upper)}]')


def _geometric(pairs, x, sign):
    out = ZERO
    for q, c in pairs:
        out = out + c * q ** (sign * x)
    return out


def _tail_text(pairs):
    return ' + '.join(f'({c})*({q})^x' for q, c in pairs) or '0'


def delta_plus_infinity(k=0):
    """:math:`\\delta_{+\\infty}`, all diagonal values 1"""
    return RankOneDistribution(k, 0, ((ONE, ONE),), (), 1, ((ONE, ONE),))


def g_r(k=0, c=1):
    """The geometric distribution :math:`a_n = c \\cdot r^{-n}`"""
    c = as_scalar(c)
    return RankOneDistribution(k, 0, ((RPARAM, c),), (), 1, ((RPARAM.inv(), c),))


def eta_distribution(eta):
    """The embedding of a fiber measure :math:`c \\eta_k`: :math:`a_p = c \\cdot r^{-p}`"""
    return g_r(eta.beta.n, eta.c)


def min_pattern(p, k=0, c=1):
    """
    The pattern :math:`a_x = c` for x <= p and :math:`c \\cdot r^{-(x-p)}` for
    x >= p.
    """
    c = as_scalar(c)
    return RankOneDistribution(k, p, ((ONE, c),), (), p + 1,
                               ((RPARAM.inv(), c * RPARAM ** p),))


def canonical_element(kind, k=0, p=0, c=1):
    """
    Canonical elements by name: ``delta_geq`` (at p), ``delta_plus_infinity``,
    ``g_r`` and ``eta`` (with coefficient c).
    """
    if kind == 'delta_geq':
        return delta_geq(p, k)
    if kind == 'delta_plus_infinity':
        return delta_plus_infinity(k)
    if kind == 'g_r':
        return g_r(k)
    if kind == 'eta':
        return g_r(k, c)
    raise HarmonicError(f'Unknown canonical element {kind!r}')

##################################################################
##  PAIRING AND MAPS
##################################################################

def pair_rank1(f, a):
    """
    The pairing :math:`\\langle f, a \\rangle = \\sum_p c_p a_p`.

    Raises
    ------
    FiberMismatchError
    """
    validate_fiber(a, f.k, 'distribution')
    out = ZERO
    for p, c in f.coefficients().items():
        out = out + c * a(p)
    return out


def s_map(a):
    """The off-diagonal sequence :math:`x \\mapsto a_x - a_{x+1}`"""
    return RankOneDistribution(
        a.k, a.xlo - 1, tuple((q, e * (1 - q.inv())) for q, e in a.lower),
        tuple(a(x) - a(x + 1) for x in range(a.xlo, a.xhi)),
        a.xhi, tuple((q, d * (1 - q)) for q, d in a.upper)
    )


def translate(obj, shift, k=None):
    """
    The translation :math:`b_x = a_{x - s}` (distributions) or
    :math:`g(p) = f(p - s)` (functions), optionally re-fibred to fiber k.
    """
    k = obj.k if k is None else k
    if isinstance(obj, RankOneFunction):
        return RankOneFunction(k, obj.base + shift, obj.values, obj.tail)
    return RankOneDistribution(
        k, obj.xlo + shift, tuple((q, e * q ** shift) for q, e in obj.lower),
        obj.middle, obj.xhi + shift, tuple((q, d * q ** (-shift)) for q, d in obj.upper)
    )
