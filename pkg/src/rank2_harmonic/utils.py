import numba
import numpy as np

CACHE = False

##################################################################
##  INTEGER HELPERS
##################################################################

def half_product(x, y):
    """
    Exact value of :math:`xy/2` for an even product, without passing
    through rationals. Used for :math:`\\frac{1}{2}b(b-1)` and
    :math:`\\frac{1}{2}m(n_1+n_2-1)(n_1-n_2)`.

    Parameters
    ----------
    x : int
        First factor
    y : int
        Second factor

    Returns
    -------
    out : int
        The halved product

    Raises
    ------
    AssertionError
    """
    if x % 2 == 0:
        return (x // 2) * y
    assert y % 2 == 0, f'Product {x}*{y} is odd'
    return x * (y // 2)

def triangular(b):
    """:math:`\\frac{1}{2}b(b-1)` for any integer b"""
    return half_product(b, b - 1)

def quad_box(bound):
    """
    All quadruples (a, b, c, m) with every entry in [-bound, bound].

    Parameters
    ----------
    bound : int
        The box radius

    Returns
    -------
    box : np.array(2d)
        An int64 array of shape ((2*bound+1)^4, 4)
    """
    r = np.arange(-bound, bound + 1, dtype=np.int64)
    grid = np.stack(np.meshgrid(r, r, r, r, indexing='ij'), axis=-1)
    return grid.reshape(-1, 4)

##################################################################
##  NUMBA KERNELS: QUADRUPLE GROUP
##################################################################

@numba.njit(cache=CACHE)
def quad_mul_batch(x, y):
    """
    Row-wise product in the quadruple group

    .. math::
        (a_1 + a_2 + m_1 b_2, b_1 + b_2,
        c_1 + c_2 + a_1 b_2 + \\frac{1}{2} b_2 (b_2 - 1) m_1, m_1 + m_2)

    .. note::
        This function is Numba accelerated

    Parameters
    ----------
    x : np.array(2d)
        Left factors as an (N, 4) int64 array
    y : np.array(2d)
        Right factors as an (N, 4) int64 array

    Returns
    -------
    out : np.array(2d)
        The (N, 4) products
    """
    out = np.empty_like(x)
    for i in range(x.shape[0]):
        b2 = y[i, 1]
        m1 = x[i, 3]
        out[i, 0] = x[i, 0] + y[i, 0] + m1 * b2
        out[i, 1] = x[i, 1] + b2
        out[i, 2] = x[i, 2] + y[i, 2] + x[i, 0] * b2 + (b2 * (b2 - 1) // 2) * m1
        out[i, 3] = m1 + y[i, 3]
    return out

@numba.njit(cache=CACHE)
def quad_inverse_batch(x):
    """
    Row-wise inverse in the quadruple group.

    .. note::
        This function is Numba accelerated
    """
    out = np.empty_like(x)
    for i in range(x.shape[0]):
        a, b, c, m = x[i, 0], x[i, 1], x[i, 2], x[i, 3]
        out[i, 0] = -a + m * b
        out[i, 1] = -b
        out[i, 2] = -c + a * b - (b * (b + 1) // 2) * m
        out[i, 3] = -m
    return out

@numba.njit(cache=CACHE)
def quad_commutator_batch(x, y):
    """
    Row-wise commutator :math:`x y x^{-1} y^{-1}`.

    .. note::
        This function is Numba accelerated
    """
    return quad_mul_batch(quad_mul_batch(x, y),
                          quad_mul_batch(quad_inverse_batch(x), quad_inverse_batch(y)))

@numba.njit(cache=CACHE)
def rows_equal(x, y):
    """
    Numba compatible row-wise equality of two 2d arrays.

    .. note::
        This function is Numba accelerated
    """
    out = np.ones(x.shape[0], dtype=np.bool_)
    for i in range(x.shape[0]):
        for j in range(x.shape[1]):
            if x[i, j] != y[i, j]:
                out[i] = False
                break
    return out

##################################################################
##  NUMBA KERNELS: CHARACTER SUMS
##################################################################

@numba.njit(cache=CACHE)
def character_sum(exps, numerators, p):
    """
    Accumulate :math:`\\sum_x \\zeta^{e(y, x)} f(x)` where every value f(x)
    is given by integer numerators in the basis
    :math:`1, \\zeta, \\ldots, \\zeta^{p-1}` (not reduced modulo the
    cyclotomic polynomial).

    .. note::
        This function is Numba accelerated

    Parameters
    ----------
    exps : np.array(2d)
        The (Ny, Nx) exponents of the character, in [0, p)
    numerators : np.array(2d)
        The (Nx, p) integer numerators of the input values
    p : int
        The prime

    Returns
    -------
    out : np.array(2d)
        The (Ny, p) integer numerators of the sums
    """
    ny, nx = exps.shape
    out = np.zeros((ny, p), dtype=np.int64)
    for x in range(nx):
        # Skip zero inputs
        nonzero = False
        for i in range(p):
            if numerators[x, i] != 0:
                nonzero = True
                break
        if not nonzero:
            continue

        for y in range(ny):
            e = exps[y, x]
            for i in range(p):
                out[y, (i + e) % p] += numerators[x, i]
    return out
