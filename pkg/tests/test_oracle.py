from fractions import Fraction

import numpy as np
import pytest

from rank2_harmonic.oracle import (
    FiniteFunction, TruncatedLaurent, digits_table, dist_images, fourier_local, fourier_local_literal,
    haar_integral, haar_shell_masses, i_map, index_of_digits, invariant_functions, is_invariant,
    j_map, layer_diagram_check, local_pairing, psi, shell_index
)
from rank2_harmonic.rank1 import RankOneFunction, delta_geq, delta_plus_infinity
from rank2_harmonic.report import PASS
from rank2_harmonic.scalar import CyclotomicScalar
from rank2_harmonic.validation import HarmonicError, NotInvariantError, WindowOverflowError
from rank2_harmonic.value_group import GammaElement


def _rational_values(p, values):
    return tuple(CyclotomicScalar.rational(p, v) for v in values)

##################################################################
##  LAURENT SERIES AND CHARACTERS
##################################################################

def test_truncated_laurent():
    x = TruncatedLaurent.from_dict(3, 2, {-1: 2, 0: 4})
    assert x.coefficient(-1) == 2 and x.coefficient(0) == 1 and x.coefficient(5) == 0
    assert x.residue() == 2 and x.valuation == -1
    assert TruncatedLaurent.zero(3, 2).valuation == float('inf')
    assert (x - x) == TruncatedLaurent.zero(3, 2)


def test_truncated_laurent_product():
    p, M = 2, 2
    assert TruncatedLaurent.monomial(p, M, -1) * TruncatedLaurent.monomial(p, M, 1) == TruncatedLaurent.monomial(p, M, 0)
    assert (TruncatedLaurent.monomial(p, M, 1) * TruncatedLaurent.monomial(p, M, 1)).valuation == float('inf')
    with pytest.raises(WindowOverflowError):
        TruncatedLaurent.monomial(p, M, -2) * TruncatedLaurent.monomial(p, M, -2)
    with pytest.raises(HarmonicError):
        TruncatedLaurent.zero(2, 2) + TruncatedLaurent.zero(3, 2)
    with pytest.raises(HarmonicError):
        TruncatedLaurent(2, 2, (0, 1))


def test_local_pairing_and_characters():
    a, one = TruncatedLaurent.monomial(3, 2, -1), TruncatedLaurent.monomial(3, 2, 0)
    assert local_pairing(a, one, 0) == 1
    assert local_pairing(one, one, -1) == 1
    assert local_pairing(one, one, 0) == 0
    assert psi(3, 0) == CyclotomicScalar.rational(3, 1)
    assert psi(3, 1) * psi(3, 2) == CyclotomicScalar.rational(3, 1)
    assert psi(3, 4) == psi(3, 1)

##################################################################
##  FINITE FUNCTIONS
##################################################################

def test_digits():
    digits = digits_table(3, 2)
    assert digits.shape == (9, 2)
    assert digits[5].tolist() == [2, 1]
    assert np.array_equal(index_of_digits(digits, 3), np.arange(9))
    assert shell_index(2, 0, 2).tolist() == [2, 0, 1, 0]


def test_indicator_and_evaluation():
    f = FiniteFunction.indicator(2, 3, 1, n=0, m=2)
    assert f.values == _rational_values(2, (1, 0, 1, 0))
    assert f == FiniteFunction.indicator(2, 3, 1)
    assert f(TruncatedLaurent.monomial(2, 3, 1)) == CyclotomicScalar.rational(2, 1)
    assert f(TruncatedLaurent.monomial(2, 3, 0)).is_zero
    assert f(TruncatedLaurent.monomial(2, 3, -1)).is_zero
    assert FiniteFunction.indicator(3, 2, 0).u_translate() == FiniteFunction.indicator(3, 2, 1)
    assert FiniteFunction.indicator(3, 2, 0).reflect() == FiniteFunction.indicator(3, 2, 0)


def test_finite_function_errors():
    with pytest.raises(WindowOverflowError):
        FiniteFunction(2, 2, -3, 0, (0,) * 8)
    with pytest.raises(HarmonicError):
        FiniteFunction(2, 2, 0, 1, (0,))
    with pytest.raises(HarmonicError):
        FiniteFunction(4, 2, 0, 0, (1,))
    with pytest.raises(HarmonicError):
        FiniteFunction.indicator(2, 2, 0).scale_by_unit(TruncatedLaurent.monomial(2, 2, 1))


def test_haar():
    assert haar_integral(FiniteFunction.indicator(2, 3, 0)).to_rational() == 1
    assert haar_integral(FiniteFunction.indicator(2, 3, 1, n=0, m=2)).to_rational() == Fraction(1, 2)
    for p in (2, 3):
        masses = haar_shell_masses(p, 2)
        assert all(masses[y] == (1 - Fraction(1, p)) * Fraction(p) ** -y for y in range(-2, 2))

##################################################################
##  FOURIER
##################################################################

@pytest.mark.parametrize('p', [2, 3])
@pytest.mark.parametrize('n, v', [(0, 0), (1, 0), (-1, 1), (0, -2), (2, -1)])
def test_fourier_of_indicators(p, n, v):
    M = 3
    expected = FiniteFunction.indicator(p, M, -n - v).scale(Fraction(p) ** -n)
    assert fourier_local(FiniteFunction.indicator(p, M, n), v) == expected


@pytest.mark.parametrize('p', [2, 3])
def test_fourier_inversion(rng, p):
    M = 3
    for _ in range(3):
        f = FiniteFunction(p, M, -1, 1, tuple(int(x) for x in rng.integers(-2, 3, size=p ** 2)))
        for v in (-1, 0, 1):
            assert fourier_local(fourier_local(f, v), v) == f.reflect().scale(Fraction(p) ** v)
        assert fourier_local(f, 0) == fourier_local_literal(f, 0)


def test_fourier_window_overflow():
    with pytest.raises(WindowOverflowError):
        fourier_local(FiniteFunction.indicator(2, 2, 2), 1)

##################################################################
##  COINVARIANTS AND DISTRIBUTIONS
##################################################################

def test_shells_and_invariance():
    f = FiniteFunction.from_shells(2, 3, 0, 2, {0: 5, 1: 7}, 9)
    assert f.values == _rational_values(2, (9, 5, 7, 5))
    assert is_invariant(f)
    assert i_map(f) == j_map(f) == RankOneFunction(0, 0, (5, 7), 9)
    assert len(list(invariant_functions(2, 3, 0, 2))) == 8


def test_coinvariants_of_non_invariant_function():
    f = FiniteFunction(3, 2, 0, 1, (0, 1, 2))
    assert not is_invariant(f)
    with pytest.raises(NotInvariantError):
        i_map(f)
    assert j_map(f, k=2) == RankOneFunction(2, 0, (Fraction(3, 2),), 0)


@pytest.mark.parametrize('p', [2, 3])
def test_coinvariant_square(p):
    M = 2
    for n in range(-M, M + 1):
        f = FiniteFunction.indicator(p, M, n)
        assert i_map(f) == j_map(f) == delta_geq(n)
    unit = TruncatedLaurent.from_dict(p, M, {0: 1, 1: 1})
    f = FiniteFunction(p, M, -1, 1, tuple(range(p ** 2)))
    assert j_map(f - f.scale_by_unit(unit)).is_zero


@pytest.mark.parametrize('p', [2, 3])
def test_distribution_images(p):
    assert dist_images('delta0', p, 2) == delta_plus_infinity(0)
    assert dist_images('haar', p, 2) == dist_images('g_q', p, 2)
    with pytest.raises(HarmonicError):
        dist_images('bogus', p, 2)


@pytest.mark.parametrize('gamma', [GammaElement(0, 1), GammaElement(1, 0), GammaElement(-1, 2)])
@pytest.mark.parametrize('k', [-1, 0, 2])
def test_layer_diagram(k, gamma):
    checks = layer_diagram_check(k, gamma, 2, 3, np.random.default_rng(1))
    assert checks and all(c.status == PASS for c in checks)


def test_layer_diagram_window_overflow():
    with pytest.raises(WindowOverflowError):
        layer_diagram_check(0, GammaElement(0, 8), 2, 3)
