from fractions import Fraction

import pytest

from rank2_harmonic.scalar import ONE, RPARAM, ZERO, CyclotomicScalar, Scalar, as_scalar, r_power
from rank2_harmonic.validation import (
    CyclotomicMismatchError, HarmonicError, NotRationalError, ScalarDivisionError, ScalarPoleError
)


def test_field_arithmetic():
    assert Scalar(1) / Scalar(3) + Fraction(2, 3) == ONE
    assert RPARAM * RPARAM.inv() == ONE
    assert (ONE + RPARAM) / (ONE - RPARAM ** 2) == ONE / (ONE - RPARAM)
    assert r_power(-3) * r_power(3) == ONE
    assert 2 - RPARAM == -(RPARAM - 2)
    assert (RPARAM ** 2 - 1) / (RPARAM - 1) == RPARAM + 1


def test_canonical_equality_and_hash():
    assert len({Scalar(2), as_scalar('4/2'), Scalar(Fraction(6, 3))}) == 1
    assert (RPARAM + 1) / (RPARAM ** 2 - 1) == (RPARAM - 1).inv()
    assert hash((RPARAM + 1) / (RPARAM ** 2 - 1)) == hash((RPARAM - 1).inv())


def test_terms_round_trip():
    s = (Scalar(Fraction(3, 2)) * RPARAM ** 3 - 1) / (RPARAM ** 2 + 2)
    assert Scalar.from_terms(s.numerator_terms(), s.denominator_terms()) == s
    assert Scalar.from_terms([(1, 1)]) == RPARAM
    assert '/' in s.canonical_text()


@pytest.mark.parametrize('value, q, expected', [
    (RPARAM.inv(), 2, Fraction(1, 2)),
    (Scalar(2) * RPARAM ** -2 + 1, 2, Fraction(3, 2)),
    (ONE + RPARAM, Fraction(1, 3), Fraction(4, 3)),
    (ZERO, 5, Fraction(0)),
])
def test_eval_at(value, q, expected):
    assert value.eval_at(q) == expected


def test_errors():
    with pytest.raises(ScalarDivisionError):
        ONE / ZERO
    with pytest.raises(ZeroDivisionError):
        ZERO.inv()
    with pytest.raises(ScalarDivisionError):
        Scalar.from_terms([(0, 1)], [])
    with pytest.raises(ScalarPoleError):
        (ONE / (ONE - RPARAM)).eval_at(1)
    with pytest.raises(NotRationalError):
        RPARAM.to_fraction()
    with pytest.raises(HarmonicError):
        Scalar(1.5)


def test_constants():
    assert Scalar(Fraction(3, 4)).to_fraction() == Fraction(3, 4)
    assert as_scalar('3/4') == Fraction(3, 4)
    assert as_scalar(-2) == -2
    with pytest.raises(HarmonicError):
        as_scalar('x')
    assert ZERO.is_zero and not ZERO
    assert not RPARAM.is_constant()

##################################################################
##  CYCLOTOMIC
##################################################################

@pytest.mark.parametrize('p', [2, 3, 5, 7])
def test_roots_of_unity_sum_to_zero(p):
    total = CyclotomicScalar.rational(p, 0)
    for j in range(p):
        total = total + CyclotomicScalar.zeta(p, j)
    assert total.is_zero


@pytest.mark.parametrize('p', [3, 5])
def test_cyclotomic_field(p):
    z = CyclotomicScalar.zeta(p, 1)
    assert z * CyclotomicScalar.zeta(p, p - 1) == CyclotomicScalar.rational(p, 1)
    x = z + 2
    assert x * x.inv() == CyclotomicScalar.rational(p, 1)
    assert (x / x).to_rational() == 1
    assert z.conjugate(2) == CyclotomicScalar.zeta(p, 2)
    with pytest.raises(NotRationalError):
        z.to_rational()


def test_cyclotomic_errors():
    assert CyclotomicScalar.zeta(2, 1).to_rational() == -1
    with pytest.raises(CyclotomicMismatchError):
        CyclotomicScalar.zeta(3) + CyclotomicScalar.zeta(5)
    with pytest.raises(HarmonicError):
        CyclotomicScalar.zeta(4)
    with pytest.raises(ScalarDivisionError):
        CyclotomicScalar.rational(3, 0).inv()
    with pytest.raises(HarmonicError):
        CyclotomicScalar(3, (Fraction(1),))
