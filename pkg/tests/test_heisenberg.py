import numpy as np
import pytest

from rank2_harmonic.generators import (
    random_breve, random_gamma, random_hat, random_quad, random_rank2_distribution,
    random_rank2_function, random_tilde
)
from rank2_harmonic.heisenberg import (
    QUAD_IDENTITY, HeisHat, HeisQuad, HeisTilde, act, ext_identity, ext_inverse, ext_mul,
    hat_to_quad, heis_iso, heis_iso_inverse, is_central, lambda_iso, matrix_rep, phi_k,
    quad_commutator, quad_inverse, quad_mul, quad_to_hat, rho, section_conjugate, t_act,
    tilde_identity, tilde_inverse, tilde_mul, varrho
)
from rank2_harmonic.rank1 import delta_geq
from rank2_harmonic.rank2 import delta_staircase, pair_rank2, retarget_alpha
from rank2_harmonic.scalar import RPARAM
from rank2_harmonic.torsor import TorsorElement, Z0, base_measure
from rank2_harmonic.utils import triangular
from rank2_harmonic.validation import (
    BasePointMismatchError, EndpointMismatchError, ExtendedGroupError, HarmonicError
)
from rank2_harmonic.value_group import ALPHA0, BreveElement, GammaElement

##################################################################
##  QUADRUPLES
##################################################################

def test_quad_law_examples():
    x, y = HeisQuad(1, 0, 0, 0), HeisQuad(0, 1, 0, 0)
    assert quad_mul(x, y) == HeisQuad(1, 1, 1, 0)
    assert quad_mul(y, x) == HeisQuad(1, 1, 0, 0)
    assert quad_commutator(x, y) == HeisQuad(0, 0, 1, 0)
    assert HeisQuad(1, 2, 3) == HeisQuad(1, 2, 3, 0)


@pytest.mark.parametrize('m', [-2, 1, 3])
@pytest.mark.parametrize('b', [-3, 0, 2])
def test_loop_commutator(m, b):
    out = quad_commutator(HeisQuad(0, 0, 0, m), HeisQuad(0, b, 0, 0))
    assert out == HeisQuad(m * b, 0, -m * b * (b + 1) // 2, 0)


def test_quad_group_laws(rng):
    for _ in range(50):
        x, y, z = random_quad(rng), random_quad(rng), random_quad(rng)
        assert quad_mul(quad_mul(x, y), z) == quad_mul(x, quad_mul(y, z))
        assert quad_mul(x, quad_inverse(x)) == QUAD_IDENTITY
        assert quad_mul(quad_inverse(x), x) == QUAD_IDENTITY
        assert np.array_equal(matrix_rep(x) @ matrix_rep(y), matrix_rep(quad_mul(x, y)))
        k = int(rng.integers(-3, 4))
        assert phi_k(k, x) == section_conjugate(k, x)
        t = quad_commutator(quad_commutator(x, y), z)
        assert is_central(t) and t.a == t.b == t.m == 0


def test_center():
    assert is_central(HeisQuad(0, 0, 7, 0))
    assert not is_central(HeisQuad(0, 0, 0, 1))
    assert not is_central(HeisQuad(1, 0, 0, 0))
    assert np.array_equal(matrix_rep(QUAD_IDENTITY), np.eye(4, dtype=np.int64))

##################################################################
##  PAIRS AND THE EXTENDED GROUP
##################################################################

def test_heis_iso():
    x = heis_iso(1, 2, 3)
    assert x.beta == GammaElement(2, 1) and x.h.t == -3
    assert heis_iso_inverse(x) == (1, 2, 3)
    assert heis_iso(0, 0, 0) == tilde_identity(ALPHA0)
    with pytest.raises(EndpointMismatchError):
        HeisTilde(ALPHA0, GammaElement(1, 0), TorsorElement(ALPHA0, ALPHA0, 0))


def test_heis_iso_is_a_homomorphism(rng):
    for _ in range(30):
        x, y = random_quad(rng)._replace(m=0), random_quad(rng)._replace(m=0)
        product = tilde_mul(heis_iso(*x[:3]), heis_iso(*y[:3]))
        assert heis_iso_inverse(product) == tuple(quad_mul(x, y)[:3])


def test_tilde_group_laws(rng):
    for _ in range(20):
        alpha = random_breve(rng)
        x, y, z = random_tilde(rng, alpha), random_tilde(rng, alpha), random_tilde(rng, alpha)
        assert tilde_mul(tilde_mul(x, y), z) == tilde_mul(x, tilde_mul(y, z))
        assert tilde_mul(x, tilde_inverse(x)) == tilde_identity(alpha)
    with pytest.raises(BasePointMismatchError):
        tilde_mul(tilde_identity(ALPHA0), tilde_identity(BreveElement.column(1)))


def test_extended_group_matches_quadruples(rng):
    for _ in range(30):
        alpha = random_breve(rng)
        x, y = random_quad(rng), random_quad(rng)
        assert hat_to_quad(quad_to_hat(x, alpha)) == x
        assert hat_to_quad(ext_mul(quad_to_hat(x, alpha), quad_to_hat(y, alpha))) == quad_mul(x, y)
        g = random_hat(rng, alpha)
        assert ext_mul(g, ext_inverse(g)) == ext_identity(alpha)


def test_transport(rng):
    for _ in range(20):
        a1, a2 = random_breve(rng), random_breve(rng)
        x = random_tilde(rng, a1)
        t = int(rng.integers(-3, 4))
        moved = lambda_iso(x, a2)
        assert moved.alpha == a2
        assert lambda_iso(x, a2, TorsorElement(a2, a1, t)) == moved
        assert lambda_iso(moved, a1) == x
        m = int(rng.integers(-2, 3))
        assert t_act(-m, t_act(m, x)) == x


def test_c_action_formula(rng):
    for _ in range(20):
        x = random_quad(rng)._replace(m=0)
        m = int(rng.integers(-3, 4))
        out = hat_to_quad(ext_mul(ext_mul(HeisHat(tilde_identity(ALPHA0), m), quad_to_hat(x)),
                                  HeisHat(tilde_identity(ALPHA0), -m)))
        assert out == HeisQuad(x.a + m * x.b, x.b, x.c + triangular(x.b) * m, 0)


def test_rho_and_varrho(rng):
    for _ in range(20):
        alpha, gamma = random_breve(rng), random_gamma(rng)
        x, y = random_tilde(rng, alpha), random_tilde(rng, alpha)
        assert rho(tilde_mul(x, y), gamma) == tilde_mul(rho(x, gamma), rho(y, gamma))
        assert rho(x, gamma).beta == -x.beta
    with pytest.raises(ExtendedGroupError):
        varrho(ext_identity(ALPHA0), GammaElement(1, 0))
    assert varrho(ext_identity(ALPHA0), GammaElement(0, 3)).m == 0

##################################################################
##  ACTIONS
##################################################################

def test_identity_and_central_actions():
    Q = delta_staircase(Z0, ALPHA0, (-1, 1))
    assert act(QUAD_IDENTITY, Q) == Q
    assert act(tilde_identity(ALPHA0), Q) == Q
    assert act(HeisQuad(0, 0, 1, 0), Q) == retarget_alpha(Q, base_measure(ALPHA0, ALPHA0, RPARAM))
    with pytest.raises(HarmonicError):
        act(tilde_identity(ALPHA0), delta_geq(0))


def test_actions_are_group_actions(rng):
    for _ in range(10):
        alpha = random_breve(rng)
        Q, S = random_rank2_function(rng, alpha), random_rank2_distribution(rng, alpha)
        g, g2 = random_hat(rng, alpha), random_hat(rng, alpha)
        assert act(g, act(g2, Q)) == act(ext_mul(g, g2), Q)
        assert act(g, act(g2, S)) == act(ext_mul(g, g2), S)
        assert pair_rank2(act(g, Q), act(g, S)) == pair_rank2(Q, S)
        x = random_tilde(rng, alpha)
        assert pair_rank2(act(x, Q), act(x, S)) == pair_rank2(Q, S)
