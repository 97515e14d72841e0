"""
Command-line front end: element I/O, transforms, group operations,
pairings, canonical elements and the verification suites.

Elements are exchanged as JSON files in the :py:mod:`rank2_harmonic.serialize`
schema. Exit codes are 0 on success or a passing report, 1 for a failing
report and 2 for usage, schema and domain errors.
"""
import argparse
import json
import logging
import sys

import numpy as np

from . import __version__
from .fourier import fourier
from .heisenberg import HeisQuad, act, heis_iso, heis_iso_inverse, quad_mul, tilde_mul
from .rank2 import delta_gamma, delta_staircase, pair_rank2
from .report import Report, passed, report_to_json
from .scalar import as_scalar
from .serialize import dumps, loads, read_json, write_json
from .suites import oracle_bridge
from .torsor import Staircase, base_measure
from .validation import HarmonicError, SchemaError, validate_prime
from .value_group import BreveElement, GammaElement
from .verify import DEFAULT_SEED, SUITES, verify

logger = logging.getLogger(__name__)

RANK2 = ('rank2fn', 'rank2dist')
# Largest finite window m^-M / m^M the oracle tabulates
MAX_ORACLE_COSETS = 4096
GROUP = ('tilde', 'hat', 'quad')

##################################################################
##  ARGUMENT PARSING
##################################################################

def _parts(text, what):
    """Split ``a,b,...`` or a JSON list ``[a, b, ...]`` into strings"""
    text = text.strip()
    if not text.startswith('['):
        return text.split(',')
    try:
        items = json.loads(text)
    except json.JSONDecodeError:
        raise argparse.ArgumentTypeError(f'{what} is not a valid JSON list: {text!r}')
    if not isinstance(items, list) or any(isinstance(x, (bool, float)) for x in items):
        raise argparse.ArgumentTypeError(f'{what} needs a list of integers, got {text!r}')
    return [str(x) for x in items]


def _ints(text, count, what):
    parts = _parts(text, what)
    if len(parts) != count:
        raise argparse.ArgumentTypeError(f'{what} needs {count} integers, got {text!r}')
    try:
        return [int(x) for x in parts]
    except ValueError:
        raise argparse.ArgumentTypeError(f'{what} needs integers, got {text!r}')


def gamma_arg(text):
    """Parse ``n,p`` or ``[n, p]`` as a point of :math:`\\Gamma`"""
    return GammaElement(*_ints(text, 2, 'gamma'))


def breve_arg(text):
    """Parse ``n,p``, ``n,-inf``, ``n`` or a JSON list as a point of :math:`\\breve{\\Gamma}`"""
    parts = _parts(text, 'alpha')
    if len(parts) == 1 or (len(parts) == 2 and parts[1].strip() == '-inf'):
        return BreveElement.column(_ints(parts[0], 1, 'alpha')[0])
    return BreveElement(*_ints(text, 2, 'alpha'))


def quad_arg(text):
    return HeisQuad(*_ints(text, 4, 'quadruple'))


def window_arg(text):
    return tuple(_ints(text, 2, 'window'))


def element_arg(text):
    """
    A group element given inline: a quadruple ``a,b,c,m`` or ``[a,b,c,m]``, a JSON payload or
    the path of a JSON file.
    """
    text = text.strip()
    if text.startswith('{'):
        return loads(text, GROUP)
    try:
        return quad_arg(text)
    except argparse.ArgumentTypeError:
        return read_json(text, GROUP)


def build_parser():
    parser = argparse.ArgumentParser(
        prog='rank2-harmonic',
        description='Exact harmonic analysis on the rank-2 value group'
    )
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    parser.add_argument('-v', '--verbose', action='count', default=0, help='INFO with -v, DEBUG with -vv')
    sub = parser.add_subparsers(dest='command', required=True)

    def output(p):
        p.add_argument('--out', help='write the result as JSON to this file')
        p.add_argument('--json', action='store_true', help='print JSON instead of text')

    # verify
    p = sub.add_parser('verify', help='run the verification suites')
    p.add_argument('--suite', default='all', choices=['all', *SUITES])
    p.add_argument('--seed', type=int, default=DEFAULT_SEED)
    p.add_argument('--size', type=int, help="randomized rounds per suite, each suite's own default if omitted")
    output(p)
    p.set_defaults(handler=cmd_verify)

    # fourier
    p = sub.add_parser('fourier', help='Fourier transform of a rank-2 element')
    p.add_argument('--in', dest='infile', required=True, help='rank2fn or rank2dist JSON')
    p.add_argument('--gamma', type=gamma_arg, default=GammaElement(0, 0))
    output(p)
    p.set_defaults(handler=cmd_fourier)

    # heis
    p = sub.add_parser('heis', help='Heisenberg group operations')
    p.add_argument('op', choices=['mul', 'act', 'iso'])
    p.add_argument('elements', nargs='*', help='quadruples a,b,c,m, JSON payloads or JSON files')
    p.add_argument('--repr', choices=['quad', 'tilde'], default='quad')
    p.add_argument('--in', dest='infile', help='rank-2 element acted on by heis act')
    output(p)
    p.set_defaults(handler=cmd_heis)

    # pair
    p = sub.add_parser('pair', help='pairing of a rank-2 function and distribution')
    p.add_argument('function', help='rank2fn JSON file')
    p.add_argument('distribution', help='rank2dist JSON file')
    output(p)
    p.set_defaults(handler=cmd_pair)

    # oracle
    p = sub.add_parser('oracle', help='the finite local-field model')
    p.add_argument('--p', type=int, default=2)
    p.add_argument('--M', type=int, default=3)
    p.add_argument('--suite', default='all', choices=['all', *ORACLE_SUITES])
    p.add_argument('--seed', type=int, default=DEFAULT_SEED)
    p.add_argument('--size', type=int, help='randomized rounds, the oracle-bridge default if omitted')
    output(p)
    p.set_defaults(handler=cmd_oracle)

    # act
    p = sub.add_parser('act', help='act on a rank-2 element')
    p.add_argument('--in', dest='infile', required=True, help='rank2fn or rank2dist JSON')
    p.add_argument('--by', dest='element', required=True,
                   help='quadruple a,b,c,m or a tilde/hat JSON payload or file')
    output(p)
    p.set_defaults(handler=cmd_act)

    # delta
    p = sub.add_parser('delta', help='characteristic elements')
    p.add_argument('kind', choices=['staircase', 'gamma'])
    p.add_argument('--alpha', type=breve_arg, default=BreveElement.column(0))
    p.add_argument('--slope', type=int, default=0)
    p.add_argument('--intercept', type=int, default=0)
    p.add_argument('--window', type=window_arg, default=(0, 0))
    p.add_argument('--gamma', type=breve_arg, default=BreveElement(0, 0), help='the point of delta gamma')
    p.add_argument('--coeff', default='1', help='coefficient of the measure b')
    output(p)
    p.set_defaults(handler=cmd_delta)
    return parser

##################################################################
##  COMMANDS
##################################################################

def emit(obj, args):
    """Write a result to --out and print it as JSON or text"""
    if args.out:
        write_json(obj, args.out)
        logger.info('Wrote %s to %s', type(obj).__name__, args.out)
    print(dumps(obj, indent=2) if args.json else str(obj))
    return 0


def emit_reports(reports, args):
    ok = all(passed(r) for r in reports)
    payload = {'passed': ok, 'reports': [report_to_json(r) for r in reports]}
    if args.out:
        with open(args.out, 'w') as f:
            json.dump(payload, f, indent=2)
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        for r in reports:
            failed = [c for c in r.checks if c.status == 'fail']
            print(f'{r.suite}: {len(r.checks) - len(failed)}/{len(r.checks)} passed')
            for c in failed:
                print(f'  FAIL {c.name}: {json.dumps(c.witness)}')
    return 0 if ok else 1


def cmd_verify(args):
    return emit_reports(verify(args.suite, args.seed, args.size, progress=not args.json), args)


def cmd_fourier(args):
    return emit(fourier(read_json(args.infile, RANK2), args.gamma), args)


def _product(elements, mul):
    out = elements[0]
    for x in elements[1:]:
        out = mul(out, x)
    return out


def cmd_heis(args):
    if args.repr == 'quad':
        elements = [_require(element_arg(x), HeisQuad) for x in args.elements]
    else:
        elements = [loads(x, 'tilde') if x.strip().startswith('{') else read_json(x, 'tilde') for x in args.elements]
    if not elements:
        raise SchemaError(f'heis {args.op} needs at least one element')

    if args.op == 'mul':
        return emit(_product(elements, quad_mul if args.repr == 'quad' else tilde_mul), args)
    if args.op == 'act':
        if not args.infile:
            raise SchemaError('heis act needs --in')
        X = read_json(args.infile, RANK2)
        for g in reversed(elements):
            X = act(g, X)
        return emit(X, args)

    # iso
    x = elements[0]
    if args.repr == 'quad':
        if x.m != 0:
            raise HarmonicError(f'Only quadruples with m = 0 lie in Heis(3, Z), got {list(x)}')
        return emit(heis_iso(x.a, x.b, x.c), args)
    return emit(HeisQuad(*heis_iso_inverse(x), 0), args)


def _require(x, cls):
    if not isinstance(x, cls):
        raise SchemaError(f'Expected {cls.__name__}, got {type(x).__name__}')
    return x


def cmd_pair(args):
    Q = read_json(args.function, 'rank2fn')
    S = read_json(args.distribution, 'rank2dist')
    return emit(pair_rank2(Q, S), args)


def _layer_checks(rng, size, p, M):
    checks = []
    for k in oracle_bridge.LAYER_FIBERS:
        for gamma in oracle_bridge.LAYER_GAMMAS:
            if abs(gamma.p - 1) <= M:
                checks.extend(oracle_bridge.layer_diagram_check(k, gamma, p, M, rng))
    return checks


# Oracle sub-suites: run(rng, size, p, M) -> list of Check
ORACLE_SUITES = {
    'fourier': lambda rng, size, p, M: (oracle_bridge.field_checks(p, M)
                                        + oracle_bridge.inversion_checks(rng, p, M, max(1, size // 10))),
    'coinvariants': lambda rng, size, p, M: oracle_bridge.coinvariant_checks(rng, p, M, max(1, size // 10)),
    'distributions': lambda rng, size, p, M: oracle_bridge.distribution_checks(p, M),
    'layers': _layer_checks,
}


def cmd_oracle(args):
    validate_prime(args.p)
    if args.M < 2:
        raise HarmonicError(f'The oracle needs M >= 2, got {args.M}')
    if args.p ** (2 * args.M) > MAX_ORACLE_COSETS:
        raise HarmonicError(f'p^(2M) = {args.p ** (2 * args.M)} cosets exceed {MAX_ORACLE_COSETS}')
    names = list(ORACLE_SUITES) if args.suite == 'all' else [args.suite]
    rng = np.random.default_rng(args.seed)
    size = oracle_bridge.OracleBridge.size if args.size is None else args.size
    reports = [Report(f'oracle-{n}', ORACLE_SUITES[n](rng, size, args.p, args.M)) for n in names]
    return emit_reports(reports, args)


def cmd_act(args):
    return emit(act(element_arg(args.element), read_json(args.infile, RANK2)), args)


def cmd_delta(args):
    if args.kind == 'staircase':
        Z = Staircase(args.slope, args.intercept)
        return emit(delta_staircase(Z, args.alpha, args.window), args)
    b = base_measure(args.alpha, args.gamma, as_scalar(args.coeff))
    return emit(delta_gamma(args.gamma, b, args.alpha), args)

##################################################################
##  ENTRY POINT
##################################################################

def main(argv=None):
    """
    Run the command line.

    Parameters
    ----------
    argv : list(str), optional
        The arguments, by default ``sys.argv[1:]``

    Returns
    -------
    code : int
        0 on success, 1 for failing checks, 2 for usage, schema or domain errors
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    level = logging.WARNING if args.verbose == 0 else logging.INFO if args.verbose == 1 else logging.DEBUG
    logging.basicConfig(level=level, format='%(levelname)s %(name)s: %(message)s')

    try:
        return args.handler(args)
    except HarmonicError as e:
        logger.error('%s: %s', type(e).__name__, e)
        return 2
    except OSError as e:
        logger.error('%s', e)
        return 2


if __name__ == '__main__':
    sys.exit(main())
