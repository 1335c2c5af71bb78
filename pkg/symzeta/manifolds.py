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

"""Manifold records and the gluing calculus for their Gromov series.

Every series is a rational function of the single variable t attached to
the record's distinguished square-zero class: the section torus T of a
mapping torus or the fiber F of an elliptic surface.
"""

from collections import namedtuple

from symzeta.core.hookenv import (
    log,
    DEBUG,
)
from symzeta.exactalg import (
    Matrix,
    Polynomial,
    charpoly_rev,
    cokernel_decomposition,
    det_exact,
    symplectic_check,
)
from symzeta.exceptions import (
    ConsistencyError,
    DimensionError,
    DomainError,
    HypothesisError,
    IncompatibleFibersError,
    ValidationError,
)
from symzeta.knots import (
    FiberedKnot,
    alexander_audit,
)
from symzeta.series import (
    DEFAULT_ORDER,
    RationalFunction,
)

FULL = 'full'
PARTIAL = 'partial'
PARTIAL_WITH_SW_NOTE = 'partial_with_sw_note'

# full outranks the partial kinds; a glued record is no more complete than
# its least complete piece.
_COMPLETENESS_RANK = {
    PARTIAL: 0,
    PARTIAL_WITH_SW_NOTE: 1,
    FULL: 2,
}

SECTION_CLASS = 'T'
FIBER_CLASS = 'F'

GENUS_ONE_PARTIAL = 'genus-1 partial series'

_FIELDS = (
    'name', 'complex_dim', 'fiber_genus', 'kappa_multiple', 'series',
    'completeness', 'sw_equal', 'distinguished_class', 'monodromy_genus',
    'elliptic_index', 'homology', 'notes', 'label',
)


class ManifoldInvariant(namedtuple('ManifoldInvariant', _FIELDS)):
    """Record of a symplectic manifold and its single-variable Gromov series.

    kappa_multiple is c with canonical class c times the distinguished
    class. homology, when known, is a dict with free_rank, torsion and b1
    of H_1.
    """

    __slots__ = ()

    def __new__(cls, name, complex_dim, fiber_genus, kappa_multiple,
                series=None, completeness=PARTIAL, sw_equal=False,
                distinguished_class=FIBER_CLASS, monodromy_genus=None,
                elliptic_index=None, homology=None, notes=(), label=None):
        if completeness not in _COMPLETENESS_RANK:
            raise ValidationError(
                'unknown completeness {!r}'.format(completeness))
        if complex_dim < 1:
            raise ValidationError(
                'complex dimension must be >= 1, got {}'.format(complex_dim))
        if series is not None:
            series = series.canonical()
        return super(ManifoldInvariant, cls).__new__(
            cls, name, complex_dim, fiber_genus, kappa_multiple, series,
            completeness, bool(sw_equal), distinguished_class,
            monodromy_genus, elliptic_index, homology, tuple(notes), label)

    def replace(self, **kwargs):
        return self._replace(**kwargs)


def _lesser(a, b):
    return a if _COMPLETENESS_RANK[a] <= _COMPLETENESS_RANK[b] else b


def first_homology(f):
    """H_1(X_f) = cok(I - f) + Z^2."""
    identity = Matrix.identity(f.rows)
    free_rank, torsion = cokernel_decomposition(identity - f)
    return {
        'free_rank': free_rank,
        'torsion': torsion,
        'b1': free_rank + 2,
    }


def mapping_torus(f, genus=None, name='X_f'):
    """X_f with Gr^T = det(I - tf)/(1 - t)^2 and kappa = (2g - 2)T.

    The series is the full Gromov series when det(I - f) = +-1; otherwise
    only the section-class part is certified.
    """
    if not f.is_square:
        raise DimensionError('monodromy must be square')
    if genus is None:
        genus = f.rows // 2
    if f.rows != 2 * genus:
        raise DimensionError(
            'genus {} needs a {}x{} monodromy, got {}x{}'.format(
                genus, 2 * genus, 2 * genus, f.rows, f.cols))
    if not f.integral:
        raise ValidationError('monodromy must be integral')
    if not symplectic_check(f):
        raise ValidationError('monodromy is not symplectic')
    gate = det_exact(Matrix.identity(f.rows) - f)
    series = RationalFunction(charpoly_rev(f), Polynomial.one_minus_t(2))
    homology = first_homology(f)
    log('X_f: det(I - f) = {}, b1 = {}'.format(gate, homology['b1']),
        level=DEBUG)
    return ManifoldInvariant(
        name, 2, 1, 2 * genus - 2, series,
        completeness=FULL if gate in (1, -1) else PARTIAL,
        distinguished_class=SECTION_CLASS,
        monodromy_genus=genus,
        homology=homology)


def elliptic_surface(n):
    """E(n) with Gr^F = (1 - t)^(n - 2) and kappa = (n - 2)F."""
    if n < 0:
        raise DomainError('E(n) needs n >= 0, got {}'.format(n))
    notes = []
    if n == 0:
        notes.append('E(0) = S^2 x T^2 carries the formal series '
                     '(1 - t)^-2')
    return ManifoldInvariant(
        'E({})'.format(n), 2, 1, n - 2,
        RationalFunction.one_minus_t_power(n - 2),
        completeness=FULL if n >= 2 else PARTIAL,
        elliptic_index=n,
        notes=notes)


def _require_series(record):
    if record.series is None:
        raise DomainError('{} has no Gromov series'.format(record.name))


def _add_indices(a, b):
    if a is None and b is None:
        return None
    return (a or 0) + (b or 0)


def fiber_sum(a, b):
    """X_1 #_F X_2 with Gr = (1 - t)^2 Gr_1 Gr_2 and kappa_1 + kappa_2 + 2."""
    for record in (a, b):
        if record.complex_dim != 2:
            raise DomainError(
                'fiber sums are defined for 4-manifolds; {} has complex '
                'dimension {}'.format(record.name, record.complex_dim))
        _require_series(record)
    if a.fiber_genus != b.fiber_genus:
        raise IncompatibleFibersError(
            'cannot glue a genus {} fiber of {} to a genus {} fiber of '
            '{}'.format(a.fiber_genus, a.name, b.fiber_genus, b.name))
    series = (RationalFunction(Polynomial.one_minus_t(2)) *
              a.series * b.series)
    return ManifoldInvariant(
        '{}#{}'.format(a.name, b.name), 2, a.fiber_genus,
        a.kappa_multiple + b.kappa_multiple + 2, series,
        completeness=_lesser(a.completeness, b.completeness),
        monodromy_genus=_add_indices(a.monodromy_genus, b.monodromy_genus),
        elliptic_index=_add_indices(a.elliptic_index, b.elliptic_index))


def _surgery_name(z, knot_name):
    if z.elliptic_index is not None and \
            z.name == 'E({})'.format(z.elliptic_index):
        return 'E({},{})'.format(z.elliptic_index, knot_name)
    return '{}({})'.format(z.name, knot_name)


def knot_surgery(z, f_or_knot):
    """Z(f): glue X_f into Z along T = F; Gr = Gr_Z det(I - tf).

    Accepts a monodromy Matrix or a FiberedKnot.
    """
    if z.complex_dim != 2:
        raise DomainError(
            'knot surgery needs a 4-manifold; {} has complex dimension '
            '{}'.format(z.name, z.complex_dim))
    _require_series(z)
    if isinstance(f_or_knot, FiberedKnot):
        f, genus, knot_name = (f_or_knot.monodromy, f_or_knot.genus,
                               f_or_knot.name)
    else:
        f, genus, knot_name = f_or_knot, f_or_knot.rows // 2, 'f'
    x_f = mapping_torus(f, genus)
    gate = det_exact(Matrix.identity(f.rows) - f)
    if gate not in (1, -1):
        raise HypothesisError(
            'knot surgery needs det(I - f) = +-1, got {}'.format(gate))
    series = z.series * RationalFunction(charpoly_rev(f))
    glued = fiber_sum(z, x_f)
    if glued.series != series:
        raise ConsistencyError(
            'surgery series {} differs from fiber sum {}'.format(
                series, glued.series))
    completeness = glued.completeness
    notes = list(z.notes)
    if completeness != FULL and z.elliptic_index == 1:
        completeness = PARTIAL_WITH_SW_NOTE
        notes.append('partial series; it carries more information than '
                     'the Seiberg-Witten series')
    if isinstance(f_or_knot, FiberedKnot):
        notes.append('homotopy equivalent to {}'.format(z.name))
    elliptic_index = z.elliptic_index
    return glued.replace(
        name=_surgery_name(z, knot_name),
        series=series,
        completeness=completeness,
        sw_equal=elliptic_index is not None and elliptic_index > 1,
        monodromy_genus=genus,
        elliptic_index=elliptic_index,
        homology=x_f.homology,
        notes=tuple(notes))


def sphere_product(record, euler=2):
    """X x Y with Gr = Gr_X^chi(Y); Y = S^2 unless euler says otherwise.

    The canonical-class multiple of X is carried unchanged.
    """
    _require_series(record)
    name = '{}xS2'.format(record.name) if euler == 2 else \
        '{}xY(chi={})'.format(record.name, euler)
    return record.replace(
        name=name,
        complex_dim=record.complex_dim + 1,
        series=(record.series ** euler).canonical(),
        completeness=PARTIAL,
        sw_equal=False,
        label=GENUS_ONE_PARTIAL)


def adjunction_check(kappa_dot_a, genus, self_intersection):
    """kappa.A = 2(g - 1) - A.A"""
    return kappa_dot_a == 2 * (genus - 1) - self_intersection


def canonical_class(record):
    """kappa as a multiple of the distinguished class, with its pairing."""
    c = record.kappa_multiple
    cls = record.distinguished_class
    return {
        'multiple': c,
        'class': cls,
        'kappa': '{}{}'.format(c, cls) if c else '0',
        # the distinguished class is square zero
        'kappa_dot_class': 0,
    }


def audit_record(record):
    """alexander_audit of a full 4-dimensional record's series numerator."""
    if record.complex_dim != 2 or record.monodromy_genus is None:
        raise DomainError(
            '{} carries no monodromy genus to audit against'.format(
                record.name))
    _require_series(record)
    return alexander_audit(record.series.numerator, record.monodromy_genus)


def distinguish(a, b, order=DEFAULT_ORDER):
    """Compare Gromov series coefficient-wise through t^order."""
    if order < 0:
        raise DomainError('order must be >= 0, got {}'.format(order))
    _require_series(a)
    _require_series(b)
    sa = a.series.expand(order)
    sb = b.series.expand(order)
    report = {'a': a.name, 'b': b.name, 'order': order}
    for k in range(order + 1):
        if sa[k] != sb[k]:
            report.update(equal=False, power=k,
                          coefficients=[sa[k], sb[k]])
            return report
    report['equal'] = True
    return report
