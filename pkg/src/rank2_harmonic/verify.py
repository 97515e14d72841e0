"""
The verification driver: runs the named suites with a seeded generator and
collects their reports.
"""
import logging
from collections import OrderedDict

import numpy as np
from tqdm import tqdm

from .report import FAIL, Report, passed
from .suites.fourier_involution import FourierInvolution
from .suites.heisenberg_laws import HeisenbergLaws
from .suites.oracle_bridge import OracleBridge
from .suites.pairing_invariance import PairingInvariance
from .suites.torsor_oracle import TorsorOracle
from .validation import HarmonicError

logger = logging.getLogger(__name__)

DEFAULT_SEED = 0

SUITES = OrderedDict((s.name, s) for s in (
    FourierInvolution, PairingInvariance, HeisenbergLaws, TorsorOracle, OracleBridge
))


def suite_names(name):
    """
    Resolve a suite name, with ``all`` standing for every suite in order.

    Raises
    ------
    HarmonicError
        If the name is unknown
    """
    if name == 'all':
        return list(SUITES)
    if name not in SUITES:
        raise HarmonicError(f'Unknown suite {name!r}, expected one of {", ".join(["all", *SUITES])}')
    return [name]


def run_suite(suite, seed=DEFAULT_SEED, size=None):
    """
    Run a single suite with its own generator seeded by `seed`.

    Parameters
    ----------
    suite : :py:class:`rank2_harmonic.report.Suite`
        The suite to run
    seed : int
        The seed of the generator
    size : int, optional
        The number of randomized rounds, the suite's own default if None

    Returns
    -------
    report : :py:class:`rank2_harmonic.report.Report`
        The checks of the suite
    """
    if size is None:
        size = suite.size
    logger.info('Running %s (seed=%d, size=%d)', suite.name, seed, size)
    report = Report(suite.name, suite.run(np.random.default_rng(seed), size))
    for c in report.checks:
        if c.status == FAIL:
            logger.warning('%s: %s failed, witness %s', suite.name, c.name, c.witness)
    logger.info('%s: %d checks, %s', suite.name, len(report.checks), 'pass' if passed(report) else 'FAIL')
    return report


def verify(name='all', seed=DEFAULT_SEED, size=None, progress=True):
    """
    Run the named suite, or every suite for ``all``.

    Parameters
    ----------
    name : str
        A suite name or ``all``
    seed : int
        The seed of every suite's generator
    size : int, optional
        The number of randomized rounds per suite, each suite's own default if None
    progress : bool
        Whether to show a progress bar over the suites

    Returns
    -------
    reports : list(:py:class:`rank2_harmonic.report.Report`)
        One report per suite, in order

    Raises
    ------
    HarmonicError
        If the suite is unknown
    """
    names = suite_names(name)
    reports = []
    with tqdm(total=len(names), disable=not progress) as pbar:
        for n in names:
            pbar.set_description(n)
            reports.append(run_suite(SUITES[n], seed, size))
            pbar.update(1)
    return reports
