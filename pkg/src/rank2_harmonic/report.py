"""
Result records shared by the verification suites and the oracle.
"""
from collections import namedtuple

from .validation import HarmonicError

PASS, FAIL, SKIP = 'pass', 'fail', 'skip'

# A single named check; failing checks carry a JSON-compatible witness
Check = namedtuple('Check', 'name status witness', defaults=(None,))

# The checks of one suite
Report = namedtuple('Report', 'suite checks')

# A verification suite: run(rng, size) -> list of Check, with its default number of rounds
Suite = namedtuple('Suite', 'name description run size', defaults=(200,))


def check(name, ok, witness=None):
    """
    Build a check from a boolean outcome. The witness is only kept for
    failures.
    """
    if ok:
        return Check(name, PASS)
    return Check(name, FAIL, witness if witness is not None else {})


def attempt(name, thunk, witness=None):
    """
    Evaluate a boolean thunk as a check. Domain errors become failures
    whose witness records the error.
    """
    try:
        ok = bool(thunk())
    except HarmonicError as e:
        return Check(name, FAIL, {**(witness or {}), 'error': f'{type(e).__name__}: {e}'})
    return check(name, ok, witness)


def passed(report):
    """Whether no check of the report failed"""
    return all(c.status != FAIL for c in report.checks)


def report_to_json(report):
    return {
        'suite': report.suite,
        'passed': passed(report),
        'checks': [{'name': c.name, 'status': c.status, 'witness': c.witness} for c in report.checks],
    }
