"""
Error types and shared validators.

Every failure of a domain operation raises a subclass of
:py:class:`HarmonicError`. The ``validate_*`` functions check a single
precondition, raise on failure and return True otherwise.
"""


class HarmonicError(Exception):
    """Base class of all errors raised by the library"""


class ScalarDivisionError(HarmonicError, ZeroDivisionError):
    """Division of a scalar by zero"""


class ScalarPoleError(HarmonicError):
    """Evaluation of a rational function at one of its poles"""


class CyclotomicMismatchError(HarmonicError):
    """Arithmetic between cyclotomic scalars of different primes"""


class NotRationalError(HarmonicError):
    """A cyclotomic value was expected to be rational"""


class EndpointMismatchError(HarmonicError):
    """Torsor or measure endpoints do not line up"""


class FiberMismatchError(HarmonicError):
    """Rank-1 objects living on different fibers"""


class ZeroMeasureError(HarmonicError):
    """A measure was required to be nonzero"""


class MatchingConditionError(HarmonicError):
    """
    The matching condition of a rank-2 function fails at slot `k`.
    """
    def __init__(self, k, message=None):
        self.k = k
        super().__init__(message or f'Matching condition violated at k={k}')


class NotEquivalentError(HarmonicError):
    """A set has infinite symmetric difference with the reference staircase"""


class BasePointMismatchError(HarmonicError):
    """Objects over different base points alpha"""


class ExtendedGroupError(HarmonicError):
    """The extended isomorphism requires a parameter with zero projection"""


class WindowOverflowError(HarmonicError):
    """An oracle operation needs a larger truncation window"""


class NotInvariantError(HarmonicError):
    """A finite function is not invariant under the unit group"""


class SchemaError(HarmonicError):
    """Malformed JSON input"""


def validate_endpoints(x, alpha, beta, what='element'):
    """
    Validate the endpoints of a torsor or measure element.

    Parameters
    ----------
    x : :py:class:`rank2_harmonic.torsor.TorsorElement` or :py:class:`rank2_harmonic.torsor.MeasureElement`
        The element to check
    alpha : :py:class:`rank2_harmonic.value_group.BreveElement`
        The expected left endpoint
    beta : :py:class:`rank2_harmonic.value_group.BreveElement`
        The expected right endpoint
    what : str
        Name used in the error message

    Raises
    ------
    EndpointMismatchError
    """
    if x.alpha != alpha or x.beta != beta:
        raise EndpointMismatchError(
            f'{what} has endpoints [{x.alpha}, {x.beta}], expected [{alpha}, {beta}]'
        )
    return True


def validate_same_alpha(x, y):
    """
    Validate that two objects live over the same base point.

    Raises
    ------
    BasePointMismatchError
    """
    if x.alpha != y.alpha:
        raise BasePointMismatchError(f'Base points differ: {x.alpha} != {y.alpha}')
    return True


def validate_nonzero_measure(m, what='measure'):
    """
    Validate that a measure element is nonzero.

    Raises
    ------
    ZeroMeasureError
    """
    if m.c.is_zero:
        raise ZeroMeasureError(f'{what} on [{m.alpha}, {m.beta}] is zero')
    return True


def validate_prime(p):
    """
    Validate that p is a prime number.

    Raises
    ------
    HarmonicError
    """
    if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
        raise HarmonicError(f'p={p} is not prime')
    return True


def validate_fiber(x, k, what='element'):
    """
    Validate the fiber index of a rank-1 object.

    Raises
    ------
    FiberMismatchError
    """
    if x.k != k:
        raise FiberMismatchError(f'{what} lives on fiber {x.k}, expected fiber {k}')
    return True
