"""
Exact coefficients: the field :math:`\\mathbb{Q}(r)` of rational functions in
the formal parameter r, and cyclotomic scalars
:math:`\\mathbb{Q}(\\zeta_p)` for the finite-field oracle.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Tuple

from sympy.polys.domains import QQ
from sympy.polys.fields import field

from .validation import (
    CyclotomicMismatchError, HarmonicError, NotRationalError,
    ScalarDivisionError, ScalarPoleError, validate_prime
)

# The rational function field Q(r) and its generator
QR, R = field('r', QQ)


def _to_fraction(c):
    return Fraction(int(c.numerator), int(c.denominator))


def _poly_terms(poly):
    return sorted(((monom[0], _to_fraction(c)) for monom, c in poly.terms()), reverse=True)


def _poly_from_terms(terms):
    return QR.ring.from_dict({
        (int(k),): QQ(c.numerator, c.denominator)
        for k, c in ((k, Fraction(c)) for k, c in terms) if c != 0
    })


def _poly_text(terms):
    if not terms:
        return '0'
    return ' + '.join(f'{c}*r^{k}' for k, c in terms)


class Scalar:
    """
    An element of :math:`\\mathbb{Q}(r)` in canonical form.

    The numerator and denominator are coprime, the denominator has
    integer coefficients with a positive leading coefficient. Equality
    and hashing use the canonical form, so two scalars are equal iff
    they are equal as field elements.

    Parameters
    ----------
    value : int, Fraction, Scalar or sympy FracElement
        The value to wrap
    """
    __slots__ = ('_f',)

    def __init__(self, value=0):
        if isinstance(value, Scalar):
            f = value._f
        elif isinstance(value, Fraction):
            f = QR(QQ(value.numerator, value.denominator))
        elif isinstance(value, int):
            f = QR(value)
        elif getattr(value, 'field', None) is QR:
            f = value
        else:
            raise HarmonicError(f'Cannot convert {value!r} to a scalar')
        object.__setattr__(self, '_f', f)

    def __setattr__(self, name, value):
        raise AttributeError('Scalar is immutable')

    ##################################################
    # CONSTRUCTION
    ##################################################

    @classmethod
    def from_terms(cls, num, den=((0, 1),)):
        """
        Build a scalar from sparse term lists [(k, c), ...] meaning
        :math:`\\sum c r^k`.

        Raises
        ------
        ScalarDivisionError
        """
        den_poly = _poly_from_terms(den)
        if not den_poly:
            raise ScalarDivisionError('Zero denominator')
        return cls(QR.new(_poly_from_terms(num), den_poly))

    def numerator_terms(self):
        """The numerator as [(k, Fraction), ...], highest degree first"""
        return _poly_terms(self._f.numer)

    def denominator_terms(self):
        """The denominator as [(k, Fraction), ...], highest degree first"""
        return _poly_terms(self._f.denom)

    def canonical_text(self):
        """Canonical "num/den" string of sparse c*r^k terms"""
        return f'{_poly_text(self.numerator_terms())}/{_poly_text(self.denominator_terms())}'

    ##################################################
    # FIELD OPERATIONS
    ##################################################

    @staticmethod
    def _coerce(other):
        if isinstance(other, Scalar):
            return other
        if isinstance(other, (int, Fraction)):
            return Scalar(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Scalar(self._f + other._f)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Scalar(self._f - other._f)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Scalar(other._f - self._f)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Scalar(self._f * other._f)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero:
            raise ScalarDivisionError(f'Division of {self} by zero')
        return Scalar(self._f / other._f)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __neg__(self):
        return Scalar(-self._f)

    def __pos__(self):
        return self

    def inv(self):
        """
        The multiplicative inverse.

        Raises
        ------
        ScalarDivisionError
        """
        return ONE / self

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else self.inv()
        return Scalar(base._f ** abs(n))

    @property
    def is_zero(self):
        return not self._f

    def __bool__(self):
        return not self.is_zero

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._f == other._f

    def __hash__(self):
        return hash(self._f)

    def __repr__(self):
        return f'Scalar({self})'

    def __str__(self):
        return str(self._f.as_expr())

    ##################################################
    # SPECIALIZATION
    ##################################################

    def eval_at(self, q):
        """
        Evaluate the rational function at r = q.

        Parameters
        ----------
        q : int or Fraction
            The value of the parameter

        Returns
        -------
        value : Fraction
            The exact value

        Raises
        ------
        ScalarPoleError
        """
        q = Fraction(q)
        den = _horner(self.denominator_terms(), q)
        if den == 0:
            raise ScalarPoleError(f'{self} has a pole at r={q}')
        return _horner(self.numerator_terms(), q) / den

    def is_constant(self):
        """Whether the scalar lies in Q"""
        return self._f.numer.is_ground and self._f.denom.is_ground

    def to_fraction(self):
        """
        The value of a constant scalar.

        Raises
        ------
        NotRationalError
        """
        if not self.is_constant():
            raise NotRationalError(f'{self} depends on r')
        return self.eval_at(0)


def _horner(terms, q):
    # Terms may contain the exponent 0 only as polynomials, degrees are >= 0
    value = Fraction(0)
    coeffs = dict(terms)
    for k in range(max(coeffs, default=0), -1, -1):
        value = value * q + coeffs.get(k, 0)
    return value


ZERO = Scalar(0)
ONE = Scalar(1)
RPARAM = Scalar(R)


@lru_cache(maxsize=None)
def r_power(n):
    """:math:`r^n` for any integer n"""
    return RPARAM ** n


def as_scalar(value):
    """
    Coerce ints, Fractions and strings like "3/4" to a Scalar.

    Raises
    ------
    HarmonicError
    """
    if isinstance(value, Scalar):
        return value
    if isinstance(value, str):
        try:
            return Scalar(Fraction(value))
        except (ValueError, ZeroDivisionError):
            raise HarmonicError(f'Cannot parse {value!r} as a rational scalar')
    return Scalar(value)


##################################################################
##  CYCLOTOMIC SCALARS
##################################################################

@dataclass(frozen=True)
class CyclotomicScalar:
    """
    An element of the p-th cyclotomic field, stored as p-1 rational
    coefficients against :math:`1, \\zeta, \\ldots, \\zeta^{p-2}`, i.e.
    reduced modulo the p-th cyclotomic polynomial.
    """
    p: int
    coeffs: Tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.p - 1:
            raise HarmonicError(f'Expected {self.p - 1} coefficients, got {len(self.coeffs)}')

    @classmethod
    def from_vector(cls, p, vector):
        """
        Reduce a length-p coefficient vector in the basis
        :math:`1, \\zeta, \\ldots, \\zeta^{p-1}`, using
        :math:`\\zeta^{p-1} = -\\sum_{i<p-1} \\zeta^i`.
        """
        top = Fraction(vector[p - 1])
        return cls(p, tuple(Fraction(v) - top for v in vector[:p - 1]))

    @classmethod
    def rational(cls, p, value):
        value = Fraction(value)
        return cls(p, (value,) + (Fraction(0),) * (p - 2))

    @classmethod
    def zeta(cls, p, j=1):
        """The root of unity :math:`\\zeta_p^j`"""
        validate_prime(p)
        vector = [0] * p
        vector[j % p] = 1
        return cls.from_vector(p, vector)

    def vector(self):
        """The unreduced length-p coefficient vector"""
        return self.coeffs + (Fraction(0),)

    def _check(self, other):
        if isinstance(other, (int, Fraction)):
            return CyclotomicScalar.rational(self.p, other)
        if not isinstance(other, CyclotomicScalar):
            return None
        if other.p != self.p:
            raise CyclotomicMismatchError(f'Cyclotomic primes differ: {self.p} != {other.p}')
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return CyclotomicScalar(self.p, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicScalar(self.p, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        p = self.p
        # Cyclic convolution modulo zeta^p = 1
        out = [Fraction(0)] * p
        for i, a in enumerate(self.vector()):
            if a:
                for j, b in enumerate(other.vector()):
                    if b:
                        out[(i + j) % p] += a * b
        return CyclotomicScalar.from_vector(p, out)

    __rmul__ = __mul__

    def conjugate(self, a):
        """The Galois conjugate :math:`\\zeta \\mapsto \\zeta^a`"""
        p = self.p
        out = [Fraction(0)] * p
        for i, c in enumerate(self.vector()):
            out[(i * a) % p] += c
        return CyclotomicScalar.from_vector(p, out)

    def is_rational(self):
        return all(c == 0 for c in self.coeffs[1:])

    def to_rational(self):
        """
        The value as a Fraction.

        Raises
        ------
        NotRationalError
        """
        if not self.is_rational():
            raise NotRationalError(f'{self} is not rational')
        return self.coeffs[0]

    def inv(self):
        """
        Inverse through the norm: the product of the nontrivial
        conjugates divided by the (rational) norm.

        Raises
        ------
        ScalarDivisionError
        """
        if self.is_zero:
            raise ScalarDivisionError('Inverse of cyclotomic zero')
        others = CyclotomicScalar.rational(self.p, 1)
        for a in range(2, self.p):
            others = others * self.conjugate(a)
        norm = (self * others).to_rational()
        return others * (1 / norm)

    def __truediv__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return self * other.inv()

    @property
    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def __bool__(self):
        return not self.is_zero

    def __str__(self):
        terms = [f'{c}*z^{i}' for i, c in enumerate(self.coeffs) if c]
        return ' + '.join(terms) if terms else '0'
