# Copyright 2026 The symzeta Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#  http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""JSON encoding of matrices, polynomials, series and manifold records.

Rational entries are JSON integers or "p/q" strings. Integers whose
magnitude reaches 2^53 are always written as strings so that readers with
double-precision numbers do not lose digits.
"""

from fractions import Fraction

import simplejson as json

from symzeta.core import strutils
from symzeta.exactalg import (
    Matrix,
    Polynomial,
    to_integer,
)
from symzeta.exceptions import ValidationError
from symzeta.knots import (
    FiberedKnot,
    builtin_knot,
)
from symzeta.manifolds import ManifoldInvariant
from symzeta.series import (
    RationalFunction,
    TruncatedSeries,
)
from symzeta.symclass import OrbitData
from symzeta.zeta import GradedMap

SAFE_INTEGER = 2 ** 53

JSON_ENCODE_OPTIONS = dict(
    sort_keys=True,
    allow_nan=False,
)


def encode_entry(value):
    value = Fraction(value)
    if value.denominator == 1 and abs(value.numerator) < SAFE_INTEGER:
        return value.numerator
    return strutils.rational_to_string(value)


def decode_entry(value):
    if isinstance(value, bool):
        raise ValidationError('boolean {!r} is not a rational'.format(value))
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return strutils.rational_from_string(value)
        except ValueError as e:
            raise ValidationError(str(e))
    raise ValidationError(
        'expected an integer or "p/q" string, got {!r}'.format(value))


def decode_count(value, what):
    """An integer field such as a period, genus or degree."""
    return to_integer(value, what)


def _entries(values):
    return [encode_entry(v) for v in values]


def _require(data, *keys):
    if not isinstance(data, dict):
        raise ValidationError('expected a JSON object, got {!r}'.format(data))
    missing = [k for k in keys if k not in data]
    if missing:
        raise ValidationError('missing keys: {}'.format(', '.join(missing)))


def matrix_to_json(m):
    return {'rows': [_entries(m.row(i)) for i in range(m.rows)]}


def _matrix_rows(rows):
    if not isinstance(rows, list) or not all(isinstance(r, list)
                                             for r in rows):
        raise ValidationError('matrix rows must be a list of lists')
    return Matrix([[decode_entry(x) for x in row] for row in rows])


def matrix_from_json(data):
    _require(data, 'rows')
    return _matrix_rows(data['rows'])


def polynomial_to_json(p):
    return {'coefficients': _entries(p.coefficients)}


def polynomial_from_json(data):
    _require(data, 'coefficients')
    return Polynomial([decode_entry(c) for c in data['coefficients']])


def series_to_json(s):
    return {'order': s.order, 'coefficients': _entries(s.coefficients)}


def series_from_json(data):
    _require(data, 'order', 'coefficients')
    return TruncatedSeries([decode_entry(c) for c in data['coefficients']],
                           decode_count(data['order'], 'order'))


def ratfun_to_json(r):
    return {
        'numerator': _entries(r.numerator.coefficients),
        'denominator': _entries(r.denominator.coefficients),
    }


def ratfun_from_json(data):
    _require(data, 'numerator', 'denominator')
    return RationalFunction(
        Polynomial([decode_entry(c) for c in data['numerator']]),
        Polynomial([decode_entry(c) for c in data['denominator']]))


def graded_map_to_json(g):
    return {
        'top_degree': g.top_degree,
        'maps': {str(k): None if m is None else matrix_to_json(m)['rows']
                 for k, m in enumerate(g.maps)},
    }


def graded_map_from_json(data):
    """A full graded map, or {"surface_monodromy": rows} for a surface."""
    if isinstance(data, dict) and 'surface_monodromy' in data:
        return GradedMap.surface(_matrix_rows(data['surface_monodromy']))
    _require(data, 'maps')
    if not isinstance(data['maps'], dict):
        raise ValidationError('graded map "maps" must be a JSON object')
    maps = {decode_count(k, 'degree'): None if not rows else _matrix_rows(rows)
            for k, rows in data['maps'].items()}
    top = data.get('top_degree')
    return GradedMap(
        maps, None if top is None else decode_count(top, 'top_degree'))


def orbits_to_json(o):
    return {'orbits': [
        {'period': k, 'e': o.e(k), 'h': o.h(k), 'h_prime': o.hprime(k)}
        for k in o.periods()]}


def orbits_from_json(data):
    _require(data, 'orbits')
    counts = {}
    for entry in data['orbits']:
        _require(entry, 'period')
        period = decode_count(entry['period'], 'period')
        counts[period] = tuple(decode_count(entry.get(key, 0), key)
                               for key in ('e', 'h', 'h_prime'))
    return OrbitData(counts)


def knot_to_json(k):
    return {
        'name': k.name,
        'genus': k.genus,
        'monodromy': matrix_to_json(k.monodromy)['rows'],
    }


def knot_from_json(data):
    """A knot object, or a bare string naming a built-in knot."""
    if isinstance(data, str):
        return builtin_knot(data)
    _require(data, 'genus', 'monodromy')
    return FiberedKnot(data.get('name', 'K'), data['genus'],
                       _matrix_rows(data['monodromy']))


def manifold_to_json(r):
    return {
        'name': r.name,
        'complex_dim': r.complex_dim,
        'fiber_genus': r.fiber_genus,
        'kappa_multiple': r.kappa_multiple,
        'series': None if r.series is None else ratfun_to_json(r.series),
        'completeness': r.completeness,
        'sw_equal': r.sw_equal,
        'distinguished_class': r.distinguished_class,
        'monodromy_genus': r.monodromy_genus,
        'elliptic_index': r.elliptic_index,
        'homology': r.homology,
        'notes': list(r.notes),
        'label': r.label,
    }


def manifold_from_json(data):
    _require(data, 'name', 'complex_dim', 'fiber_genus', 'kappa_multiple')
    series = data.get('series')
    optional = {k: data[k] for k in (
        'completeness', 'sw_equal', 'distinguished_class', 'monodromy_genus',
        'elliptic_index', 'homology', 'notes', 'label')
        if data.get(k) is not None}
    for key in ('monodromy_genus', 'elliptic_index'):
        if key in optional:
            optional[key] = decode_count(optional[key], key)
    integers = [decode_count(data[key], key) for key in (
        'complex_dim', 'fiber_genus', 'kappa_multiple')]
    return ManifoldInvariant(
        data['name'], *integers,
        series=None if series is None else ratfun_from_json(series),
        **optional)


_ENCODERS = (
    (Matrix, matrix_to_json),
    (Polynomial, polynomial_to_json),
    (TruncatedSeries, series_to_json),
    (RationalFunction, ratfun_to_json),
    (GradedMap, graded_map_to_json),
    (OrbitData, orbits_to_json),
    (FiberedKnot, knot_to_json),
    (ManifoldInvariant, manifold_to_json),
)


def to_jsonable(obj):
    """Recursively convert library values to plain JSON data."""
    for kind, encoder in _ENCODERS:
        if isinstance(obj, kind):
            return to_jsonable(encoder(obj))
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, (int, Fraction)):
        return encode_entry(obj)
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [to_jsonable(v) for v in items]
    raise TypeError('cannot encode {!r} as JSON'.format(obj))


def dumps(obj, **kwargs):
    options = dict(JSON_ENCODE_OPTIONS)
    options.update(kwargs)
    return json.dumps(to_jsonable(obj), **options)


def loads(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ValidationError('malformed JSON: {}'.format(e))


def load_file(path):
    try:
        with open(path) as f:
            return loads(f.read())
    except (IOError, OSError) as e:
        raise ValidationError('cannot read {}: {}'.format(path, e))
