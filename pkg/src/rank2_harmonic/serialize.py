"""
JSON codec for every domain type.

Top-level objects carry a ``type`` discriminator. Object-shaped types keep
their fields next to it, list-shaped types (points of :math:`\\Gamma` and
:math:`\\breve{\\Gamma}`, quadruples) put them under ``value``. Scalars are
written symbolically as sparse numerator and denominator term lists, never
as floats. Decoded elements are validated again by their constructors.
"""
import json
from fractions import Fraction

from .heisenberg import HeisHat, HeisQuad, HeisTilde
from .rank1 import RankOneDistribution, RankOneFunction
from .rank2 import BelowMode, RankTwoDistribution, RankTwoFunction, make_rank2_function, reduce_normal_form
from .scalar import Scalar, as_scalar
from .torsor import MeasureElement, Staircase, TorsorElement
from .value_group import BreveElement, GammaElement
from .validation import HarmonicError, SchemaError

NEG_INF = '-inf'

##################################################################
##  FIELD CODECS
##################################################################

def _terms_to_json(terms):
    return [[k, str(c)] for k, c in terms]


def _terms_from_json(terms):
    return [(int(k), Fraction(c)) for k, c in terms]


def scalar_to_json(s):
    return {'num': _terms_to_json(s.numerator_terms()),
            'den': _terms_to_json(s.denominator_terms()),
            'text': str(s)}


def scalar_from_json(d):
    """Scalars are term dicts, or plain integers and rational strings like "3/4" """
    if isinstance(d, dict):
        return Scalar.from_terms(_terms_from_json(d['num']), _terms_from_json(d.get('den', [[0, '1']])))
    if isinstance(d, bool) or not isinstance(d, (int, str)):
        raise SchemaError(f'Not a scalar: {d!r}')
    return as_scalar(d)


def breve_to_json(b):
    return [b.n, NEG_INF if b.p is None else b.p]


def breve_from_json(d):
    n, p = d
    if p == NEG_INF:
        return BreveElement.column(_int(n))
    return BreveElement(_int(n), _int(p))


def gamma_to_json(g):
    return [g.n, g.p]


def gamma_from_json(d):
    n, p = d
    return GammaElement(_int(n), _int(p))


def _int(x):
    if isinstance(x, bool) or not isinstance(x, int):
        raise SchemaError(f'Expected an integer, got {x!r}')
    return x


def staircase_to_json(Z):
    return {'slope': Z.slope, 'intercept': Z.intercept, 'exceptions': [list(e) for e in Z.exceptions]}


def staircase_from_json(d):
    return Staircase(_int(d.get('slope', 0)), _int(d.get('intercept', 0)),
                     tuple((_int(n), _int(z)) for n, z in d.get('exceptions', [])))


def torsor_to_json(h):
    return {'alpha': breve_to_json(h.alpha), 'beta': breve_to_json(h.beta), 't': h.t}


def torsor_from_json(d):
    return TorsorElement(breve_from_json(d['alpha']), breve_from_json(d['beta']), _int(d['t']))


def measure_to_json(m):
    return {'alpha': breve_to_json(m.alpha), 'beta': breve_to_json(m.beta), 'c': scalar_to_json(m.c)}


def measure_from_json(d):
    return MeasureElement(breve_from_json(d['alpha']), breve_from_json(d['beta']), scalar_from_json(d['c']))

##################################################################
##  RANK-1 AND RANK-2 CODECS
##################################################################

def rank1fn_to_json(f):
    return {'k': f.k, 'base': f.base, 'values': [scalar_to_json(v) for v in f.values],
            'tail': scalar_to_json(f.tail)}


def rank1fn_from_json(d):
    return RankOneFunction(_int(d['k']), _int(d['base']), tuple(scalar_from_json(v) for v in d['values']),
                           scalar_from_json(d['tail']))


def _pairs_to_json(pairs):
    return [[scalar_to_json(q), scalar_to_json(c)] for q, c in pairs]


def _pairs_from_json(pairs):
    return tuple((scalar_from_json(q), scalar_from_json(c)) for q, c in pairs)


def rank1dist_to_json(a):
    return {'k': a.k, 'xlo': a.xlo, 'lower': _pairs_to_json(a.lower),
            'middle': [scalar_to_json(v) for v in a.middle], 'xhi': a.xhi, 'upper': _pairs_to_json(a.upper)}


def rank1dist_from_json(d):
    """
    Decode either the tail-list form ``{xlo, lower, middle, xhi, upper}`` or
    the single-ratio form ``{xlo, clo, rlo, middle, xhi, chi, rhi}`` with
    :math:`a_x = c_{lo} r_{lo}^{x_{lo}-x}` below and
    :math:`a_x = c_{hi} r_{hi}^{x-x_{hi}}` above.
    """
    if 'clo' not in d:
        return RankOneDistribution(_int(d['k']), _int(d['xlo']), _pairs_from_json(d['lower']),
                                   tuple(scalar_from_json(v) for v in d['middle']), _int(d['xhi']),
                                   _pairs_from_json(d['upper']))

    xlo, xhi = _int(d['xlo']), _int(d['xhi'])
    clo, rlo = scalar_from_json(d['clo']), scalar_from_json(d['rlo'])
    chi, rhi = scalar_from_json(d['chi']), scalar_from_json(d['rhi'])
    middle = [scalar_from_json(v) for v in d['middle']]
    lower, upper = (), ()
    # A zero ratio leaves only the boundary value
    if rlo.is_zero:
        middle.insert(0, clo)
        xlo -= 1
    else:
        lower = ((rlo, clo * rlo ** xlo),)
    if rhi.is_zero:
        middle.append(chi)
        xhi += 1
    else:
        upper = ((rhi, chi * rhi ** -xhi),)
    return RankOneDistribution(_int(d['k']), xlo, lower, tuple(middle), xhi, upper)


def rank2fn_to_json(Q):
    return {'alpha': breve_to_json(Q.alpha), 'Z': staircase_to_json(Q.Z), 'klo': Q.klo, 'khi': Q.khi,
            'slots': [{'f': rank1fn_to_json(f), 'mu': measure_to_json(mu)} for f, mu in Q.slots],
            'below_mode': Q.below_mode.value}


def rank2fn_from_json(d):
    slots = [(rank1fn_from_json(s['f']), measure_from_json(s['mu'])) for s in d['slots']]
    return make_rank2_function(breve_from_json(d['alpha']), staircase_from_json(d['Z']),
                               (_int(d['klo']), _int(d['khi'])), slots,
                               BelowMode(d.get('below_mode', BelowMode.STAIRCASE.value)))


def rank2dist_to_json(S):
    return {'alpha': breve_to_json(S.alpha),
            'terms': [{'k': k, 'g': rank1dist_to_json(g), 'lambda': measure_to_json(lam)}
                      for k, g, lam in S.raw_terms]}


def rank2dist_from_json(d):
    raw = [(_int(t['k']), rank1dist_from_json(t['g']), measure_from_json(t['lambda'])) for t in d['terms']]
    return reduce_normal_form(breve_from_json(d['alpha']), raw)

##################################################################
##  GROUP CODECS
##################################################################

def tilde_to_json(x):
    return {'alpha': breve_to_json(x.alpha), 'beta': gamma_to_json(x.beta), 'h': torsor_to_json(x.h)}


def tilde_from_json(d):
    return HeisTilde(breve_from_json(d['alpha']), gamma_from_json(d['beta']), torsor_from_json(d['h']))


def hat_to_json(x):
    return {'f': tilde_to_json(x.f), 'm': x.m}


def hat_from_json(d):
    return HeisHat(tilde_from_json(d['f']), _int(d['m']))


def quad_to_json(x):
    return list(x)


def quad_from_json(d):
    if len(d) != 4:
        raise SchemaError(f'A quadruple needs 4 entries, got {d!r}')
    return HeisQuad(*(_int(v) for v in d))

##################################################################
##  DISPATCH
##################################################################

# name: (class, encoder, decoder, list-shaped)
CODECS = {
    'scalar': (Scalar, scalar_to_json, scalar_from_json, False),
    'breve': (BreveElement, breve_to_json, breve_from_json, True),
    'gamma': (GammaElement, gamma_to_json, gamma_from_json, True),
    'staircase': (Staircase, staircase_to_json, staircase_from_json, False),
    'torsor': (TorsorElement, torsor_to_json, torsor_from_json, False),
    'measure': (MeasureElement, measure_to_json, measure_from_json, False),
    'rank1fn': (RankOneFunction, rank1fn_to_json, rank1fn_from_json, False),
    'rank1dist': (RankOneDistribution, rank1dist_to_json, rank1dist_from_json, False),
    'rank2fn': (RankTwoFunction, rank2fn_to_json, rank2fn_from_json, False),
    'rank2dist': (RankTwoDistribution, rank2dist_to_json, rank2dist_from_json, False),
    'tilde': (HeisTilde, tilde_to_json, tilde_from_json, False),
    'hat': (HeisHat, hat_to_json, hat_from_json, False),
    'quad': (HeisQuad, quad_to_json, quad_from_json, True),
}


def type_name(obj):
    # HeisQuad is a tuple subclass, check exact classes first
    for name, (cls, _, _, _) in CODECS.items():
        if type(obj) is cls:
            return name
    raise SchemaError(f'No JSON schema for {type(obj).__name__}')


def encode(obj):
    """
    Encode a domain object as a JSON-compatible dict.

    Parameters
    ----------
    obj : any domain type
        The object to encode

    Returns
    -------
    out : dict
        The payload with its ``type`` discriminator

    Raises
    ------
    SchemaError
    """
    name = type_name(obj)
    _, enc, _, is_list = CODECS[name]
    payload = enc(obj)
    if is_list:
        return {'type': name, 'value': payload}
    return {'type': name, **payload}


def decode(d, expected=None):
    """
    Decode and validate a JSON payload.

    Parameters
    ----------
    d : dict
        The payload with its ``type`` discriminator
    expected : str or tuple(str), optional
        The accepted type names

    Returns
    -------
    out : domain object
        The decoded element

    Raises
    ------
    SchemaError
        For malformed payloads
    HarmonicError
        When the decoded data violates a domain invariant
    """
    if not isinstance(d, dict) or 'type' not in d:
        raise SchemaError('Expected an object with a "type" field')
    name = d['type']
    if name not in CODECS:
        raise SchemaError(f'Unknown type {name!r}')
    if expected is not None and name not in ((expected,) if isinstance(expected, str) else expected):
        raise SchemaError(f'Expected {expected}, got {name!r}')

    _, _, dec, is_list = CODECS[name]
    try:
        return dec(d['value'] if is_list else d)
    except HarmonicError:
        raise
    except (KeyError, TypeError, ValueError, IndexError, ZeroDivisionError) as e:
        raise SchemaError(f'Malformed {name}: {e!r}') from e


def dumps(obj, **kwargs):
    return json.dumps(encode(obj), **kwargs)


def loads(s, expected=None):
    """
    Raises
    ------
    SchemaError
    """
    try:
        d = json.loads(s)
    except json.JSONDecodeError as e:
        raise SchemaError(f'Invalid JSON: {e}') from e
    return decode(d, expected)


def read_json(path, expected=None):
    with open(path, 'r') as f:
        return loads(f.read(), expected)


def write_json(obj, path):
    with open(path, 'w') as f:
        f.write(dumps(obj, indent=2))
