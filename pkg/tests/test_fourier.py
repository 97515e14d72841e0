import pytest

from rank2_harmonic.fourier import (
    eta_inverse, fourier, fourier_fiber_dist, fourier_fiber_fn, reflected_fiber
)
from rank2_harmonic.generators import (
    random_breve, random_gamma, random_rank1_distribution, random_rank1_function,
    random_rank2_distribution, random_rank2_function, random_scalar
)
from rank2_harmonic.rank1 import delta_geq, delta_plus_infinity, eta_distribution
from rank2_harmonic.rank2 import delta_gamma, delta_staircase, pair_rank2
from rank2_harmonic.scalar import r_power
from rank2_harmonic.torsor import Staircase, Z0, base_measure, fiber_measure, mu_perp
from rank2_harmonic.validation import FiberMismatchError, HarmonicError, ZeroMeasureError
from rank2_harmonic.value_group import ALPHA0, BreveElement, GammaElement, perp


@pytest.mark.parametrize('x', [-2, 0, 3])
@pytest.mark.parametrize('gamma', [GammaElement(0, 0), GammaElement(1, -2), GammaElement(-2, 1)])
def test_fiber_transform_of_basis(x, gamma):
    eta = fiber_measure(1, 3)
    out = fourier_fiber_fn(delta_geq(x, 1), gamma, eta)
    assert out == delta_geq(1 - gamma.p - x, reflected_fiber(1, gamma)).scale(3 * r_power(-x))
    assert out.k == -1 - gamma.n


def test_fiber_transform_errors():
    with pytest.raises(ZeroMeasureError):
        fourier_fiber_fn(delta_geq(0, 0), GammaElement(0, 0), fiber_measure(0, 0))
    with pytest.raises(FiberMismatchError):
        fourier_fiber_fn(delta_geq(0, 2), GammaElement(0, 0), fiber_measure(0))
    with pytest.raises(FiberMismatchError):
        fourier_fiber_dist(delta_plus_infinity(0), GammaElement(1, 0), fiber_measure(0))


def test_fiber_identities(rng):
    for _ in range(25):
        k = int(rng.integers(-3, 4))
        gamma = random_gamma(rng)
        eta = fiber_measure(k, random_scalar(rng))
        inv = eta_inverse(eta, gamma)
        kp = reflected_fiber(k, gamma)
        assert fourier_fiber_dist(delta_plus_infinity(kp), gamma, eta) == eta_distribution(eta)
        assert fourier_fiber_dist(eta_distribution(inv), gamma, eta) == delta_plus_infinity(k)
        f, a = random_rank1_function(rng, k), random_rank1_distribution(rng, kp)
        assert fourier_fiber_fn(fourier_fiber_fn(f, gamma, eta), gamma, inv) == f
        assert fourier_fiber_dist(fourier_fiber_dist(a, gamma, eta), gamma, inv) == a


def test_transform_of_delta_z0():
    Q = fourier(delta_staircase(Z0, ALPHA0), GammaElement(0, 0))
    assert Q.alpha == BreveElement.column(1)
    assert Q == delta_staircase(Staircase.constant(1), BreveElement.column(1))


def test_involution(rng):
    for _ in range(15):
        alpha, gamma = random_breve(rng), random_gamma(rng)
        Q = random_rank2_function(rng, alpha)
        S = random_rank2_distribution(rng, alpha)
        assert fourier(Q, gamma).alpha == perp(alpha, gamma)
        assert fourier(fourier(Q, gamma), gamma) == Q
        assert fourier(fourier(S, gamma), gamma) == S


def test_conjugacy(rng):
    for _ in range(15):
        alpha, gamma = random_breve(rng), random_gamma(rng)
        Q = random_rank2_function(rng, alpha)
        T = random_rank2_distribution(rng, perp(alpha, gamma))
        assert pair_rank2(fourier(Q, gamma), T) == pair_rank2(Q, fourier(T, gamma))


def test_transform_of_delta_gamma(rng):
    for _ in range(15):
        alpha, point, gamma = random_breve(rng), random_breve(rng), random_gamma(rng)
        b = base_measure(alpha, point, random_scalar(rng))
        assert (fourier(delta_gamma(point, b, alpha), gamma)
                == delta_gamma(perp(point, gamma), mu_perp(b, gamma), perp(alpha, gamma)))


def test_fourier_rejects_other_objects():
    with pytest.raises(HarmonicError):
        fourier(delta_geq(0), GammaElement(0, 0))
