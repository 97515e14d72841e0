import argparse
import json

import pytest

from rank2_harmonic import __version__
from rank2_harmonic.cli import breve_arg, element_arg, gamma_arg, main
from rank2_harmonic.heisenberg import HeisQuad
from rank2_harmonic.rank2 import delta_staircase, retarget_alpha
from rank2_harmonic.scalar import RPARAM
from rank2_harmonic.serialize import read_json
from rank2_harmonic.torsor import Z0, base_measure
from rank2_harmonic.value_group import ALPHA0, BreveElement, GammaElement


def _last_json(capsys):
    return json.loads(capsys.readouterr().out)


def test_argument_parsers():
    assert gamma_arg('-1,2') == GammaElement(-1, 2)
    assert breve_arg('3') == BreveElement.column(3)
    assert breve_arg('3,-inf') == BreveElement.column(3)
    assert breve_arg('3,-4') == BreveElement(3, -4)
    assert element_arg('1,2,3,4') == HeisQuad(1, 2, 3, 4)
    assert element_arg('{"type": "quad", "value": [0, 0, 1, 0]}') == HeisQuad(0, 0, 1, 0)


def test_argument_parsers_accept_json_lists():
    assert gamma_arg('[0,1]') == GammaElement(0, 1)
    assert gamma_arg(' [-1, 2] ') == GammaElement(-1, 2)
    assert breve_arg('[3,-4]') == BreveElement(3, -4)
    assert breve_arg('[3,"-inf"]') == BreveElement.column(3)
    assert element_arg('[1,0,0,0]') == HeisQuad(1, 0, 0, 0)


@pytest.mark.parametrize('text', ['[0,1.5]', '[0]', '[0,1', '[true,1]'])
def test_gamma_rejects_bad_lists(text):
    with pytest.raises(argparse.ArgumentTypeError):
        gamma_arg(text)


def test_version(capsys):
    assert main(['--version']) == 0
    assert __version__ in capsys.readouterr().out


def test_verify_json(capsys):
    assert main(['verify', '--suite', 'torsor-oracle', '--size', '2', '--json']) == 0
    payload = _last_json(capsys)
    assert payload['passed'] is True
    assert payload['reports'][0]['suite'] == 'torsor-oracle'


def test_verify_text_and_report_file(tmp_path, capsys):
    out = tmp_path / 'report.json'
    assert main(['verify', '--suite', 'heisenberg-laws', '--size', '1', '--out', str(out)]) == 0
    assert 'heisenberg-laws:' in capsys.readouterr().out
    assert json.loads(out.read_text())['passed'] is True


def test_delta_and_pair(tmp_path, capsys):
    q, s = tmp_path / 'q.json', tmp_path / 's.json'
    assert main(['delta', 'staircase', '--out', str(q)]) == 0
    assert main(['delta', 'gamma', '--gamma', '0,0', '--out', str(s)]) == 0
    capsys.readouterr()
    assert main(['pair', str(q), str(s)]) == 0
    assert capsys.readouterr().out.strip() == '1'
    assert read_json(str(q), 'rank2fn') == delta_staircase(Z0, ALPHA0)


def test_fourier_command(tmp_path, capsys):
    q = tmp_path / 'q.json'
    assert main(['delta', 'staircase', '--out', str(q)]) == 0
    capsys.readouterr()
    assert main(['fourier', '--in', str(q), '--gamma=0,0', '--json']) == 0
    payload = _last_json(capsys)
    assert payload['type'] == 'rank2fn'
    assert payload['alpha'] == [1, '-inf']

    assert main(['fourier', '--in', str(q), '--gamma', '[0,0]', '--json']) == 0
    assert _last_json(capsys) == payload


def test_heis_commands(capsys):
    assert main(['heis', 'mul', '1,0,0,0', '0,1,0,0', '--json']) == 0
    assert _last_json(capsys) == {'type': 'quad', 'value': [1, 1, 1, 0]}
    assert main(['heis', 'mul', '[1,0,0,0]', '[0,1,0,0]', '--json']) == 0
    assert _last_json(capsys) == {'type': 'quad', 'value': [1, 1, 1, 0]}

    assert main(['heis', 'iso', '1,2,3,0', '--json']) == 0
    tilde = capsys.readouterr().out
    assert json.loads(tilde)['type'] == 'tilde'
    assert main(['heis', 'iso', '--repr', 'tilde', tilde, '--json']) == 0
    assert _last_json(capsys) == {'type': 'quad', 'value': [1, 2, 3, 0]}

    assert main(['heis', 'iso', '1,2,3,1']) == 2
    assert main(['heis', 'mul']) == 2


def test_act_commands(tmp_path):
    q, out, out2 = tmp_path / 'q.json', tmp_path / 'out.json', tmp_path / 'out2.json'
    assert main(['delta', 'staircase', '--window=-1,1', '--out', str(q)]) == 0
    assert main(['act', '--in', str(q), '--by', '0,0,1,0', '--out', str(out)]) == 0
    Q = read_json(str(q), 'rank2fn')
    assert read_json(str(out), 'rank2fn') == retarget_alpha(Q, base_measure(ALPHA0, ALPHA0, RPARAM))
    assert main(['heis', 'act', '0,0,1,0', '--in', str(q), '--out', str(out2)]) == 0
    assert read_json(str(out2), 'rank2fn') == read_json(str(out), 'rank2fn')


def test_oracle_command(capsys):
    assert main(['oracle', '--p', '2', '--M', '2', '--size', '2', '--json']) == 0
    payload = _last_json(capsys)
    assert payload['passed'] is True
    assert [r['suite'] for r in payload['reports']] == [
        'oracle-fourier', 'oracle-coinvariants', 'oracle-distributions', 'oracle-layers'
    ]


@pytest.mark.parametrize('argv', [
    ['oracle', '--p', '4'],
    ['oracle', '--p', '7', '--M', '3'],
    ['oracle', '--M', '1'],
    ['verify', '--suite', 'bogus'],
    ['delta', 'gamma', '--coeff', 'x'],
    [],
])
def test_usage_errors(argv):
    assert main(argv) == 2


def test_bad_inputs(tmp_path):
    bad = tmp_path / 'bad.json'
    bad.write_text('{not json')
    assert main(['fourier', '--in', str(bad)]) == 2
    assert main(['fourier', '--in', str(tmp_path / 'missing.json')]) == 2
    quad = tmp_path / 'quad.json'
    quad.write_text(json.dumps({'type': 'quad', 'value': [0, 0, 0, 0]}))
    assert main(['pair', str(quad), str(quad)]) == 2
