import pytest

from rank2_harmonic.rank1 import delta_geq
from rank2_harmonic.torsor import TorsorElement, base_measure
from rank2_harmonic.validation import (
    BasePointMismatchError, EndpointMismatchError, FiberMismatchError, HarmonicError,
    MatchingConditionError, ScalarDivisionError, SchemaError, ZeroMeasureError, validate_endpoints,
    validate_fiber, validate_nonzero_measure, validate_prime, validate_same_alpha
)
from rank2_harmonic.value_group import BreveElement

col = BreveElement.column


def test_hierarchy():
    for cls in (EndpointMismatchError, FiberMismatchError, MatchingConditionError, SchemaError, ZeroMeasureError):
        assert issubclass(cls, HarmonicError)
    assert issubclass(ScalarDivisionError, ZeroDivisionError)
    e = MatchingConditionError(3)
    assert e.k == 3 and '3' in str(e)


@pytest.mark.parametrize('p', [2, 3, 5, 7, 11, 13])
def test_primes(p):
    assert validate_prime(p)


@pytest.mark.parametrize('p', [-3, 0, 1, 4, 9, 15])
def test_non_primes(p):
    with pytest.raises(HarmonicError):
        validate_prime(p)


def test_validators():
    h = TorsorElement(col(1), col(0), 2)
    assert validate_endpoints(h, col(1), col(0))
    with pytest.raises(EndpointMismatchError):
        validate_endpoints(h, col(0), col(1))
    assert validate_fiber(delta_geq(0, 2), 2)
    with pytest.raises(FiberMismatchError):
        validate_fiber(delta_geq(0, 2), 1)
    with pytest.raises(ZeroMeasureError):
        validate_nonzero_measure(base_measure(col(1), col(0), 0))
    with pytest.raises(BasePointMismatchError):
        validate_same_alpha(base_measure(col(1), col(0)), base_measure(col(2), col(0)))
