"""
Heisenberg laws: agreement of the quadruple law with the abstract groups,
the matrix representation, exhaustive box identities, transports and the
equivariance of the Fourier transform.
"""
import numpy as np

from ..fourier import fourier
from ..generators import (
    random_breve, random_gamma, random_hat, random_quad, random_rank2_distribution,
    random_rank2_function, random_tilde
)
from ..heisenberg import (
    act, c_act_tilde, ext_mul, hat_to_quad, heis_iso, heis_iso_inverse, is_central, lambda_iso,
    matrix_rep, phi_k, quad_commutator, quad_mul, quad_to_hat, rho, section_conjugate, t_act,
    tilde_mul, varrho, HeisQuad
)
from ..report import Suite, attempt, check
from ..torsor import TorsorElement
from ..utils import quad_box, quad_commutator_batch, quad_mul_batch, rows_equal, triangular
from ..value_group import GammaElement, shear

# Box radius of the exhaustive commutator identities
COMMUTATOR_BOUND = 5
# Box radius of the exhaustive center and associativity checks
CENTER_BOUND = 2
ASSOCIATIVITY_BOUND = 1
# Random quadruple pairs drawn per round
AGREEMENT_PAIRS = 10


def _pairs(box):
    """All ordered pairs of rows of a box"""
    n = box.shape[0]
    return np.repeat(box, n, axis=0), np.tile(box, (n, 1))

##################################################################
##  EXHAUSTIVE BOX CHECKS
##################################################################

def box_checks():
    """Exhaustive checks over small boxes of quadruples"""
    checks = []
    r = np.arange(-COMMUTATOR_BOUND, COMMUTATOR_BOUND + 1, dtype=np.int64)
    zeros = np.zeros(r.size ** 2, dtype=np.int64)

    # [(0,0,0,m), (0,b,0,0)] = (mb, 0, -mb(b+1)/2, 0)
    m, b = (v.ravel() for v in np.meshgrid(r, r, indexing='ij'))
    x = np.stack((zeros, zeros, zeros, m), axis=1)
    y = np.stack((zeros, b, zeros, zeros), axis=1)
    expected = np.stack((m * b, zeros, -(m * b * (b + 1)) // 2, zeros), axis=1)
    ok = rows_equal(quad_commutator_batch(x, y), expected)
    checks.append(check('commutator [(0,0,0,m),(0,b,0,0)]', ok.all(),
                        {'failures': np.stack((m, b), axis=1)[~ok].tolist()[:5]}))

    # [(a,0,c,0), (0,b,0,0)] = (0, 0, ab, 0)
    a, c, b = (v.ravel() for v in np.meshgrid(r, r, r, indexing='ij'))
    zeros = np.zeros(a.size, dtype=np.int64)
    x = np.stack((a, zeros, c, zeros), axis=1)
    y = np.stack((zeros, b, zeros, zeros), axis=1)
    expected = np.stack((zeros, zeros, a * b, zeros), axis=1)
    ok = rows_equal(quad_commutator_batch(x, y), expected)
    checks.append(check('commutator [(a,0,c,0),(0,b,0,0)]', ok.all(),
                        {'failures': np.stack((a, c, b), axis=1)[~ok].tolist()[:5]}))

    # The center is {(0,0,c,0)}
    box = quad_box(CENTER_BOUND)
    central = np.ones(box.shape[0], dtype=np.bool_)
    for gen in np.eye(4, dtype=np.int64)[[0, 1, 3]]:
        g = np.repeat(gen[None, :], box.shape[0], axis=0)
        central &= rows_equal(quad_mul_batch(box, g), quad_mul_batch(g, box))
    expected = (box[:, 0] == 0) & (box[:, 1] == 0) & (box[:, 3] == 0)
    checks.append(check('center = {(0,0,c,0)}', np.array_equal(central, expected),
                        {'failures': box[central != expected].tolist()[:5]}))

    # Associativity
    box = quad_box(ASSOCIATIVITY_BOUND)
    x, y = _pairs(box)
    xy = quad_mul_batch(x, y)
    ok = True
    for z in box:
        zz = np.repeat(z[None, :], x.shape[0], axis=0)
        ok = ok and rows_equal(quad_mul_batch(xy, zz), quad_mul_batch(x, quad_mul_batch(y, zz))).all()
    checks.append(check('associativity on the box', ok))
    return checks


def central_series_checks(rng, size):
    """Triple commutators are central and generate every (0,0,c,0)"""
    checks = []
    for i in range(size):
        x, y, z = random_quad(rng), random_quad(rng), random_quad(rng)
        t = quad_commutator(quad_commutator(x, y), z)
        checks.append(check(f'triple commutator {i} is central', is_central(t) and t.a == t.b == t.m == 0,
                            {'x': list(x), 'y': list(y), 'z': list(z), 'commutator': list(t)}))

    u = quad_commutator(quad_commutator(HeisQuad(0, 0, 0, 1), HeisQuad(0, 1, 0, 0)), HeisQuad(0, 1, 0, 0))
    power = HeisQuad(0, 0, 0, 0)
    ok = u == HeisQuad(0, 0, 1, 0)
    for c in range(1, 11):
        power = quad_mul(power, u)
        ok = ok and power == HeisQuad(0, 0, c, 0)
    checks.append(check('(0,0,c,0) are products of triple commutators', ok, {'generator': list(u)}))
    return checks

##################################################################
##  RANDOMIZED AGREEMENT
##################################################################

def agreement_checks(rng, i):
    x, y = random_quad(rng), random_quad(rng)
    alpha = random_breve(rng)
    w = {'x': list(x), 'y': list(y), 'alpha': str(alpha)}
    x0, y0 = x._replace(m=0), y._replace(m=0)
    k = int(rng.integers(-3, 4))
    return [
        attempt(f'quadruple {i}: ext_mul agrees with quad_mul',
                lambda: hat_to_quad(ext_mul(quad_to_hat(x, alpha), quad_to_hat(y, alpha))) == quad_mul(x, y), w),
        attempt(f'quadruple {i}: heis_iso is a homomorphism',
                lambda: heis_iso_inverse(tilde_mul(heis_iso(*x0[:3]), heis_iso(*y0[:3])))
                == tuple(quad_mul(x0, y0)[:3]), w),
        check(f'quadruple {i}: matrix_rep is a homomorphism',
              np.array_equal(matrix_rep(x) @ matrix_rep(y), matrix_rep(quad_mul(x, y))), w),
        check(f'quadruple {i}: phi_k is conjugation by the section shear',
              phi_k(k, x) == section_conjugate(k, x) and phi_k(-k, phi_k(k, x)) == x, {**w, 'k': k}),
        attempt(f'quadruple {i}: m acts as (a + mb, b, c + b(b-1)m/2)',
                lambda: c_act_tilde(k, heis_iso(*x0[:3]))
                == heis_iso(x.a + k * x.b, x.b, x.c + triangular(x.b) * k), {**w, 'm': k}),
    ]


def transport_checks(rng, i):
    a1, a2 = random_breve(rng), random_breve(rng)
    x, y = random_tilde(rng, a1), random_tilde(rng, a1)
    m, k = int(rng.integers(-2, 3)), int(rng.integers(-2, 3))
    gamma = random_gamma(rng)
    t = int(rng.integers(-3, 4))
    w = {'alpha1': str(a1), 'alpha2': str(a2), 'x': str(x), 'y': str(y)}
    return [
        attempt(f'transport {i}: Lambda does not depend on g',
                lambda: lambda_iso(x, a2, TorsorElement(a2, a1, t)) == lambda_iso(x, a2), {**w, 't': t}),
        attempt(f'transport {i}: Lambda T = T Lambda',
                lambda: t_act(m, lambda_iso(x, a2)) == lambda_iso(t_act(m, x), shear(m, a2)), {**w, 'm': m}),
        attempt(f'transport {i}: T_k T_m = T_(k+m)',
                lambda: t_act(k, t_act(m, x)) == t_act(k + m, x), {**w, 'k': k, 'm': m}),
        attempt(f'transport {i}: rho is a homomorphism',
                lambda: rho(tilde_mul(x, y), gamma) == tilde_mul(rho(x, gamma), rho(y, gamma)),
                {**w, 'gamma': str(gamma)}),
    ]


def equivariance_checks(rng, i):
    alpha, gamma = random_breve(rng), random_gamma(rng)
    Q = random_rank2_function(rng, alpha)
    S = random_rank2_distribution(rng, alpha)
    x, g, g2 = random_tilde(rng, alpha), random_hat(rng, alpha), random_hat(rng, alpha)
    flat = GammaElement(0, gamma.p)
    w = {'alpha': str(alpha), 'gamma': str(gamma), 'Q': str(Q), 'S': str(S)}
    return [
        attempt(f'equivariance {i}: F(x Q) = rho(x) F(Q)',
                lambda: fourier(act(x, Q), gamma) == act(rho(x, gamma), fourier(Q, gamma)), {**w, 'x': str(x)}),
        attempt(f'equivariance {i}: F(x S) = rho(x) F(S)',
                lambda: fourier(act(x, S), gamma) == act(rho(x, gamma), fourier(S, gamma)), {**w, 'x': str(x)}),
        attempt(f'equivariance {i}: F(g Q) = varrho(g) F(Q)',
                lambda: fourier(act(g, Q), flat) == act(varrho(g, flat), fourier(Q, flat)),
                {**w, 'g': str(g), 'gamma': str(flat)}),
        attempt(f'equivariance {i}: F(g S) = varrho(g) F(S)',
                lambda: fourier(act(g, S), flat) == act(varrho(g, flat), fourier(S, flat)),
                {**w, 'g': str(g), 'gamma': str(flat)}),
        attempt(f'action {i}: g (g2 Q) = (g g2) Q',
                lambda: act(g, act(g2, Q)) == act(ext_mul(g, g2), Q), {**w, 'g': str(g), 'g2': str(g2)}),
        attempt(f'action {i}: g (g2 S) = (g g2) S',
                lambda: act(g, act(g2, S)) == act(ext_mul(g, g2), S), {**w, 'g': str(g), 'g2': str(g2)}),
    ]


def run(rng, size):
    checks = box_checks()
    checks.extend(central_series_checks(rng, size))
    for i in range(size * AGREEMENT_PAIRS):
        checks.extend(agreement_checks(rng, i))
    for i in range(size):
        checks.extend(transport_checks(rng, i))
        checks.extend(equivariance_checks(rng, i))
    return checks

# Create suite
HeisenbergLaws = Suite('heisenberg-laws', 'Group laws, isomorphisms, transports and equivariance', run, 50)
