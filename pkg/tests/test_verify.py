import json

import pytest

from rank2_harmonic.report import FAIL, PASS, Report, Suite, attempt, check, passed, report_to_json
from rank2_harmonic.suites.heisenberg_laws import AGREEMENT_PAIRS
from rank2_harmonic.validation import HarmonicError
from rank2_harmonic.verify import SUITES, run_suite, suite_names, verify


def test_suite_names():
    assert suite_names('all') == list(SUITES)
    assert suite_names('torsor-oracle') == ['torsor-oracle']
    assert list(SUITES) == ['fourier-involution', 'pairing-invariance', 'heisenberg-laws',
                            'torsor-oracle', 'oracle-bridge']
    with pytest.raises(HarmonicError):
        suite_names('bogus')


def test_checks_and_reports():
    assert check('ok', True) == ('ok', PASS, None)
    assert check('bad', False).witness == {}

    def boom():
        raise HarmonicError('no')
    failed = attempt('boom', boom, {'x': 1})
    assert failed.status == FAIL and failed.witness == {'x': 1, 'error': 'HarmonicError: no'}

    report = Report('demo', [check('a', True), failed])
    assert not passed(report)
    payload = report_to_json(report)
    assert payload['passed'] is False
    assert json.loads(json.dumps(payload))['checks'][1]['witness']['x'] == 1


def test_suite_default_sizes():
    assert SUITES['heisenberg-laws'].size * AGREEMENT_PAIRS >= 500
    for name in ('fourier-involution', 'pairing-invariance', 'torsor-oracle', 'oracle-bridge'):
        assert SUITES[name].size >= 200

    suite = Suite('sized', 'records its size', lambda rng, size: [check('size', False, {'size': size})], 7)
    assert run_suite(suite).checks[0].witness == {'size': 7}
    assert run_suite(suite, size=2).checks[0].witness == {'size': 2}


def test_heisenberg_pairs_scale_with_size(rng):
    checks = SUITES['heisenberg-laws'].run(rng, 1)
    agreement = [c for c in checks if c.name.endswith('ext_mul agrees with quad_mul')]
    assert len(agreement) == AGREEMENT_PAIRS


def test_failures_are_reported():
    suite = Suite('broken', 'always fails', lambda rng, size: [check('never', False, {'size': size})])
    report = run_suite(suite, size=3)
    assert report.suite == 'broken'
    assert report.checks[0].witness == {'size': 3}
    assert not passed(report)


@pytest.mark.parametrize('name', list(SUITES))
def test_suites_pass(name):
    reports = verify(name, seed=3, size=2, progress=False)
    assert len(reports) == 1
    failures = [c for c in reports[0].checks if c.status == FAIL]
    assert reports[0].checks and not failures, failures[:3]


def test_seed_reproducibility():
    a = verify('torsor-oracle', seed=5, size=3, progress=False)
    b = verify('torsor-oracle', seed=5, size=3, progress=False)
    assert [c.name for c in a[0].checks] == [c.name for c in b[0].checks]
