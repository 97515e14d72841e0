import json
from fractions import Fraction

import pytest

from rank2_harmonic.heisenberg import HeisHat, HeisQuad, heis_iso
from rank2_harmonic.rank1 import RankOneDistribution, delta_geq, g_r
from rank2_harmonic.rank2 import BelowMode, delta_gamma, delta_staircase
from rank2_harmonic.scalar import RPARAM, Scalar
from rank2_harmonic.serialize import (
    decode, dumps, encode, loads, read_json, scalar_from_json, type_name, write_json
)
from rank2_harmonic.torsor import Staircase, TorsorElement, base_measure
from rank2_harmonic.validation import EndpointMismatchError, MatchingConditionError, SchemaError
from rank2_harmonic.value_group import ALPHA0, BreveElement, GammaElement

col = BreveElement.column

SAMPLES = [
    ('scalar', (RPARAM + Fraction(1, 2)) / (RPARAM - 1)),
    ('breve', col(2)),
    ('breve', BreveElement(1, -3)),
    ('gamma', GammaElement(1, 2)),
    ('staircase', Staircase(1, 0, {2: 5})),
    ('torsor', TorsorElement(col(1), col(0), 3)),
    ('measure', base_measure(col(1), col(0), RPARAM)),
    ('rank1fn', delta_geq(2).scale(RPARAM)),
    ('rank1dist', g_r(1, 3)),
    ('rank2fn', delta_staircase(Staircase(1, -1, {0: 2}), ALPHA0, (-1, 1))),
    ('rank2dist', delta_gamma(BreveElement(0, 1), base_measure(col(2), BreveElement(0, 1), 3), col(2))),
    ('tilde', heis_iso(1, 2, 3)),
    ('hat', HeisHat(heis_iso(1, 2, 3), 2)),
    ('quad', HeisQuad(1, 2, 3, 4)),
]


@pytest.mark.parametrize('name, obj', SAMPLES, ids=[f'{n}-{i}' for i, (n, _) in enumerate(SAMPLES)])
def test_round_trip(name, obj):
    payload = encode(obj)
    assert payload['type'] == name == type_name(obj)
    assert loads(json.dumps(payload), name) == obj


def test_payload_shapes():
    assert encode(col(2)) == {'type': 'breve', 'value': [2, '-inf']}
    assert encode(HeisQuad(1, 2, 3, 4)) == {'type': 'quad', 'value': [1, 2, 3, 4]}
    assert encode(delta_staircase(Staircase(), ALPHA0))['below_mode'] == BelowMode.STAIRCASE.value
    assert encode(Scalar(Fraction(3, 4)))['text'] == '3/4'


def test_plain_scalars():
    assert scalar_from_json(3) == 3
    assert scalar_from_json('3/4') == Fraction(3, 4)
    with pytest.raises(SchemaError):
        scalar_from_json(1.5)
    with pytest.raises(SchemaError):
        scalar_from_json(True)


def test_schema_errors():
    with pytest.raises(SchemaError):
        decode({'value': [1, 2]})
    with pytest.raises(SchemaError):
        decode({'type': 'nope'})
    with pytest.raises(SchemaError):
        decode({'type': 'quad', 'value': [1, 2]})
    with pytest.raises(SchemaError):
        decode({'type': 'gamma', 'value': [1, 'x']})
    with pytest.raises(SchemaError):
        decode({'type': 'torsor', 'alpha': [0, '-inf']})
    with pytest.raises(SchemaError):
        loads('{not json')
    with pytest.raises(SchemaError):
        loads(dumps(HeisQuad(0, 0, 0, 0)), 'tilde')
    with pytest.raises(SchemaError):
        type_name(object())


def test_domain_errors_surface():
    payload = encode(heis_iso(1, 2, 3))
    payload['h']['beta'] = [5, '-inf']
    with pytest.raises(EndpointMismatchError):
        decode(payload)

    payload = encode(delta_staircase(Staircase(), ALPHA0, (0, 1)))
    payload['slots'][1]['f'] = encode(delta_geq(4, 1))
    with pytest.raises(MatchingConditionError):
        decode(payload)


def test_files(tmp_path):
    Q = delta_staircase(Staircase(0, 1), col(1))
    path = tmp_path / 'q.json'
    write_json(Q, str(path))
    assert read_json(str(path), ('rank2fn', 'rank2dist')) == Q
    assert json.loads(path.read_text())['type'] == 'rank2fn'


def test_single_ratio_distribution_form():
    r = {'num': [[1, '1']]}
    r_inv = {'num': [[0, '1']], 'den': [[1, '1']]}
    payload = {'type': 'rank1dist', 'k': 0, 'xlo': 0, 'clo': 3, 'rlo': r, 'middle': [],
               'xhi': 1, 'chi': {'num': [[0, '3']], 'den': [[1, '1']]}, 'rhi': r_inv}
    assert decode(payload) == g_r(0, 3)

    a = decode({'type': 'rank1dist', 'k': 1, 'xlo': 2, 'clo': '1/2', 'rlo': 2, 'middle': [],
                'xhi': 3, 'chi': 4, 'rhi': '1/3'})
    assert a.k == 1
    assert a(2) == Fraction(1, 2) and a(0) == 2
    assert a(3) == 4 and a(5) == Fraction(4, 9)


def test_single_ratio_zero_ratios_keep_boundary_values():
    a = decode({'type': 'rank1dist', 'k': 0, 'xlo': 0, 'clo': 2, 'rlo': 0, 'middle': [5],
                'xhi': 2, 'chi': 7, 'rhi': 0})
    assert a == RankOneDistribution(0, -1, (), (2, 5, 7), 3, ())
    assert [a(x) for x in range(-2, 4)] == [0, 0, 2, 5, 7, 0]

    with pytest.raises(SchemaError):
        decode({'type': 'rank1dist', 'k': 0, 'xlo': 0, 'clo': 2, 'middle': [], 'xhi': 1, 'chi': 1, 'rhi': 1})
