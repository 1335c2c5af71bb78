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

"""Fibered knots given by their monodromy on first homology."""

from symzeta.core.hookenv import (
    cached,
    log,
    WARNING,
)
from symzeta.exactalg import (
    Matrix,
    Polynomial,
    block_diagonal,
    charpoly_rev,
    det_exact,
    symplectic_check,
    to_integer,
)
from symzeta.exceptions import (
    DimensionError,
    InvariantViolation,
    LookupFailure,
    ValidationError,
)

TREFOIL = 'trefoil'
FIGURE8 = 'figure8'
COMPOSITE_SEPARATOR = '#'


class FiberedKnot(object):
    """A fibered knot of genus g with monodromy A in Sp(2g, Z).

    ``reference_alexander`` holds a published value of the Alexander
    polynomial, ascending, when one is known; audits compare against it.
    """

    __slots__ = ('name', 'genus', 'monodromy', 'reference_alexander')

    def __init__(self, name, genus, monodromy, reference_alexander=None):
        genus = to_integer(genus, 'knot genus')
        if genus < 1:
            raise ValidationError(
                'fibered knot genus must be >= 1, got {}'.format(genus))
        if monodromy.shape != (2 * genus, 2 * genus):
            raise DimensionError(
                'monodromy of a genus {} knot must be {}x{}, got '
                '{}x{}'.format(genus, 2 * genus, 2 * genus, *monodromy.shape))
        if not monodromy.integral:
            raise ValidationError('monodromy must be integral')
        if det_exact(monodromy) != 1:
            raise ValidationError('monodromy must have det 1')
        if not symplectic_check(monodromy):
            raise ValidationError('monodromy is not symplectic')
        self.name = name
        self.genus = genus
        self.monodromy = monodromy
        self.reference_alexander = (
            None if reference_alexander is None
            else Polynomial(reference_alexander))

    def __eq__(self, other):
        if not isinstance(other, FiberedKnot):
            return NotImplemented
        return (self.name, self.genus, self.monodromy) == \
            (other.name, other.genus, other.monodromy)

    def __hash__(self):
        return hash((self.name, self.genus, self.monodromy))

    def __repr__(self):
        return 'FiberedKnot({!r}, genus={})'.format(self.name, self.genus)


def alexander(knot):
    """A(t) = det(I - t A); degree exactly 2g."""
    p = charpoly_rev(knot.monodromy)
    if p.degree() != 2 * knot.genus:
        raise InvariantViolation(
            'Alexander polynomial of {} has degree {}, expected {}'.format(
                knot.name, p.degree(), 2 * knot.genus))
    return p


def alexander_audit(p, genus):
    """Report which of the fibered-knot polynomial conditions P satisfies.

    Never raises; failing conditions are reported as False.
    """
    degree = 2 * genus
    coefficients = [p.coefficient(k) for k in range(degree + 1)]
    integer = p.is_integral()
    normalized = (p.degree() == degree and p.coefficient(0) == 1 and
                  p.coefficient(degree) == 1)
    palindromic = (p.degree() <= degree and
                   coefficients == coefficients[::-1])
    value = p(1)
    report = {
        'genus': genus,
        'integer_coefficients': integer,
        'degree_normalized': normalized,
        'palindromic': palindromic,
        'unit_at_one': value in (1, -1),
        'value_at_one': value,
    }
    report['passed'] = all(report[k] for k in (
        'integer_coefficients', 'degree_normalized', 'palindromic',
        'unit_at_one'))
    if not report['passed']:
        log('Alexander audit failed for {} (genus {})'.format(p, genus),
            level=WARNING)
    return report


def audit_knot(knot):
    """alexander_audit of the computed polynomial plus a reference check."""
    p = alexander(knot)
    report = alexander_audit(p, knot.genus)
    report['knot'] = knot.name
    if knot.reference_alexander is not None:
        matches = knot.reference_alexander == p
        report['reference_matches'] = matches
        report['reference_coefficients'] = list(
            knot.reference_alexander.coefficients)
        if not matches:
            report['note'] = (
                'published value {} differs from det(I - tA) = {}; the '
                'determinant is authoritative'.format(
                    knot.reference_alexander, p))
            log(report['note'], level=WARNING)
    return report


def _catalog():
    return {
        TREFOIL: dict(genus=1, monodromy=[[1, 1], [-1, 0]],
                      reference_alexander=[-1, -1, 1]),
        FIGURE8: dict(genus=1, monodromy=[[2, 1], [1, 1]],
                      reference_alexander=[1, -3, 1]),
    }


def builtin_names():
    names = sorted(_catalog())
    return names + ['{}{}{}'.format(FIGURE8, COMPOSITE_SEPARATOR, TREFOIL)]


@cached
def builtin_knot(name):
    """Look up a catalog knot; ``a#b`` is the connected sum of two entries.

    The connected sum has genus g_a + g_b and block-diagonal monodromy.
    """
    if COMPOSITE_SEPARATOR in name:
        parts = [builtin_knot(part)
                 for part in name.split(COMPOSITE_SEPARATOR)]
        return FiberedKnot(
            name, sum(k.genus for k in parts),
            block_diagonal(*[k.monodromy for k in parts]))
    entry = _catalog().get(name)
    if entry is None:
        raise LookupFailure(
            'unknown knot {!r}; known knots: {}'.format(
                name, ', '.join(builtin_names())))
    return FiberedKnot(name, entry['genus'], Matrix(entry['monodromy']),
                       entry['reference_alexander'])
