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

from test_utils import (
    FIGURE8,
    THURSTON,
    TREFOIL,
    SymzetaTestCase,
    random_gated_monodromy,
    random_symplectic_word,
    seeded,
)
from symzeta import knots
from symzeta.core.hookenv import WARNING
from symzeta.exactalg import (
    Matrix,
    Polynomial,
    block_diagonal,
    det_exact,
)
from symzeta.exceptions import (
    DimensionError,
    LookupFailure,
    ValidationError,
)
from symzeta.knots import FiberedKnot

TO_PATCH = [
    'log',
]


class FiberedKnotTest(SymzetaTestCase):

    def setUp(self):
        super(FiberedKnotTest, self).setUp(knots, TO_PATCH)

    def test_validation(self):
        with self.assertRaises(ValidationError):
            FiberedKnot('K', 0, FIGURE8)
        with self.assertRaises(DimensionError):
            FiberedKnot('K', 2, FIGURE8)
        with self.assertRaises(ValidationError):
            FiberedKnot('K', 1, Matrix([[2, 0], [0, 1]]))
        with self.assertRaises(ValidationError):
            FiberedKnot('K', 1, Matrix([['1/2', 0], [0, 2]]))

    def test_equality(self):
        self.assertEqual(FiberedKnot('K', 1, FIGURE8),
                         FiberedKnot('K', 1, Matrix([[2, 1], [1, 1]])))
        self.assertNotEqual(FiberedKnot('K', 1, FIGURE8),
                            FiberedKnot('K', 1, TREFOIL))


class AlexanderTest(SymzetaTestCase):

    def setUp(self):
        super(AlexanderTest, self).setUp(knots, TO_PATCH)

    def test_examples(self):
        self.assertEqual(knots.alexander(knots.builtin_knot('figure8')),
                         Polynomial([1, -3, 1]))
        self.assertEqual(knots.alexander(knots.builtin_knot('trefoil')),
                         Polynomial([1, -1, 1]))
        composite = FiberedKnot('K', 2, block_diagonal(FIGURE8, TREFOIL))
        self.assertEqual(knots.alexander(composite),
                         Polynomial([1, -3, 1]) * Polynomial([1, -1, 1]))

    def test_value_at_one_is_det(self):
        rng = seeded(3)
        for genus in (1, 2, 3):
            knot = FiberedKnot('K', genus, random_gated_monodromy(rng, genus))
            identity = Matrix.identity(2 * genus)
            self.assertEqual(knots.alexander(knot)(1),
                             det_exact(identity - knot.monodromy))

    def test_symplectic_monodromies_pass_audit(self):
        rng = seeded(13)
        for i in range(10):
            genus = 1 + i % 3
            p, _ = random_symplectic_word(rng, genus)
            report = knots.alexander_audit(
                knots.alexander(FiberedKnot('K', genus, p)), genus)
            self.assertTrue(report['integer_coefficients'])
            self.assertTrue(report['degree_normalized'])
            self.assertTrue(report['palindromic'])


class AuditTest(SymzetaTestCase):

    def setUp(self):
        super(AuditTest, self).setUp(knots, TO_PATCH)

    def test_figure8_passes(self):
        report = knots.alexander_audit(Polynomial([1, -3, 1]), 1)
        self.assertTrue(report['passed'])
        self.assertEqual(report['value_at_one'], -1)
        self.assertFalse(self.log.called)

    def test_unipotent_fails_at_one(self):
        p = knots.alexander(FiberedKnot('thurston', 1, THURSTON))
        report = knots.alexander_audit(p, 1)
        self.assertTrue(report['palindromic'])
        self.assertTrue(report['degree_normalized'])
        self.assertFalse(report['unit_at_one'])
        self.assertEqual(report['value_at_one'], 0)
        self.assertFalse(report['passed'])
        self.log.assert_called_once_with(
            'Alexander audit failed for 1 - 2t + t^2 (genus 1)',
            level=WARNING)

    def test_wrong_degree(self):
        report = knots.alexander_audit(Polynomial([1, 1]), 1)
        self.assertFalse(report['degree_normalized'])
        self.assertFalse(report['passed'])

    def test_non_integer(self):
        report = knots.alexander_audit(Polynomial([1, '1/2', 1]), 1)
        self.assertFalse(report['integer_coefficients'])

    def test_trefoil_reference_discrepancy(self):
        report = knots.audit_knot(knots.builtin_knot('trefoil'))
        self.assertTrue(report['passed'])
        self.assertFalse(report['reference_matches'])
        self.assertEqual(report['reference_coefficients'], [-1, -1, 1])
        self.assertIn('determinant is authoritative', report['note'])
        self.log.assert_called_once_with(report['note'], level=WARNING)

    def test_figure8_reference_matches(self):
        report = knots.audit_knot(knots.builtin_knot('figure8'))
        self.assertTrue(report['reference_matches'])
        self.assertNotIn('note', report)
        self.assertEqual(report['knot'], 'figure8')


class CatalogTest(SymzetaTestCase):

    def setUp(self):
        super(CatalogTest, self).setUp(knots, TO_PATCH)

    def test_builtins(self):
        self.assertEqual(knots.builtin_knot('trefoil').monodromy, TREFOIL)
        self.assertEqual(knots.builtin_knot('figure8').monodromy, FIGURE8)
        self.assertEqual(knots.builtin_knot('figure8').genus, 1)

    def test_unknown(self):
        with self.assertRaises(LookupFailure) as ctx:
            knots.builtin_knot('unknot')
        self.assertIn('figure8', str(ctx.exception))

    def test_composite(self):
        knot = knots.builtin_knot('figure8#trefoil')
        self.assertEqual(knot.genus, 2)
        self.assertEqual(knot.monodromy, block_diagonal(FIGURE8, TREFOIL))
        self.assertIn('figure8#trefoil', knots.builtin_names())
