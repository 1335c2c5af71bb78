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
    seeded,
)
from symzeta import manifolds
from symzeta import zeta
from symzeta.exactalg import (
    Matrix,
    Polynomial,
)
from symzeta.exceptions import (
    DimensionError,
    DomainError,
    HypothesisError,
    IncompatibleFibersError,
    ValidationError,
)
from symzeta.knots import builtin_knot
from symzeta.manifolds import (
    FULL,
    PARTIAL,
    PARTIAL_WITH_SW_NOTE,
    ManifoldInvariant,
)
from symzeta.series import RationalFunction

TO_PATCH = [
    'log',
]

FIGURE8_POLY = Polynomial([1, -3, 1])
TREFOIL_POLY = Polynomial([1, -1, 1])


def one_minus_t(k):
    return RationalFunction.one_minus_t_power(k)


class MappingTorusTest(SymzetaTestCase):

    def setUp(self):
        super(MappingTorusTest, self).setUp(manifolds, TO_PATCH)

    def test_figure8(self):
        x = manifolds.mapping_torus(FIGURE8)
        self.assertEqual(x.series, RationalFunction(FIGURE8_POLY,
                                                    Polynomial([1, -2, 1])))
        self.assertEqual(x.kappa_multiple, 0)
        self.assertEqual(x.completeness, FULL)
        self.assertEqual(x.distinguished_class, manifolds.SECTION_CLASS)
        self.assertEqual(x.homology['b1'], 2)
        self.assertEqual(x.monodromy_genus, 1)

    def test_thurston(self):
        x = manifolds.mapping_torus(THURSTON)
        self.assertEqual(x.series, RationalFunction([1]))
        self.assertEqual(x.completeness, PARTIAL)
        self.assertEqual(x.homology['b1'], 3)
        self.assertEqual(x.homology['torsion'], [])

    def test_trefoil(self):
        x = manifolds.mapping_torus(TREFOIL)
        self.assertEqual(x.series, RationalFunction(TREFOIL_POLY,
                                                    Polynomial([1, -2, 1])))
        self.assertEqual(x.completeness, FULL)

    def test_kappa_grows_with_genus(self):
        x = manifolds.mapping_torus(Matrix.identity(4))
        self.assertEqual(x.kappa_multiple, 2)
        self.assertEqual(x.homology['b1'], 6)

    def test_validation(self):
        with self.assertRaises(DimensionError):
            manifolds.mapping_torus(Matrix.identity(3))
        with self.assertRaises(DimensionError):
            manifolds.mapping_torus(FIGURE8, genus=2)
        with self.assertRaises(ValidationError):
            manifolds.mapping_torus(Matrix([[1, 1], [0, 2]]))

    def test_series_matches_section_series(self):
        rng = seeded(17)
        for i in range(10):
            genus = 1 + i % 2
            f = random_gated_monodromy(rng, genus)
            x = manifolds.mapping_torus(f)
            self.assertEqual(x.completeness, FULL)
            self.assertEqual(
                x.series.expand(10),
                zeta.gromov_section(zeta.GradedMap.surface(f), 10))
            self.assertTrue(manifolds.audit_record(x)['passed'])


class EllipticSurfaceTest(SymzetaTestCase):

    def setUp(self):
        super(EllipticSurfaceTest, self).setUp(manifolds, TO_PATCH)

    def test_examples(self):
        self.assertEqual(manifolds.elliptic_surface(2).series,
                         RationalFunction([1]))
        self.assertEqual(manifolds.elliptic_surface(1).series,
                         RationalFunction([1], [1, -1]))
        self.assertEqual(manifolds.elliptic_surface(3).series,
                         RationalFunction([1, -1]))

    def test_bookkeeping(self):
        e3 = manifolds.elliptic_surface(3)
        self.assertEqual(e3.name, 'E(3)')
        self.assertEqual(e3.kappa_multiple, 1)
        self.assertEqual(e3.elliptic_index, 3)
        self.assertEqual(e3.completeness, FULL)
        self.assertEqual(manifolds.elliptic_surface(1).completeness, PARTIAL)

    def test_formal_e0(self):
        e0 = manifolds.elliptic_surface(0)
        self.assertEqual(e0.series, one_minus_t(-2))
        self.assertEqual(len(e0.notes), 1)

    def test_negative(self):
        with self.assertRaises(DomainError):
            manifolds.elliptic_surface(-1)


class FiberSumTest(SymzetaTestCase):

    def setUp(self):
        super(FiberSumTest, self).setUp(manifolds, TO_PATCH)

    def test_two_rational_surfaces_make_k3(self):
        k3 = manifolds.fiber_sum(manifolds.elliptic_surface(1),
                                 manifolds.elliptic_surface(1))
        self.assertEqual(k3.series, RationalFunction([1]))
        self.assertEqual(k3.kappa_multiple, 0)
        self.assertEqual(k3.elliptic_index, 2)
        self.assertEqual(k3.name, 'E(1)#E(1)')

    def test_induction(self):
        e1 = manifolds.elliptic_surface(1)
        for n in range(1, 7):
            glued = manifolds.fiber_sum(manifolds.elliptic_surface(n), e1)
            expected = manifolds.elliptic_surface(n + 1)
            self.assertEqual(glued.series, expected.series)
            self.assertEqual(glued.kappa_multiple, expected.kappa_multiple)
            self.assertEqual(glued.elliptic_index, n + 1)

    def test_e0_is_neutral(self):
        e0 = manifolds.elliptic_surface(0)
        for z in (manifolds.elliptic_surface(3),
                  manifolds.mapping_torus(FIGURE8),
                  manifolds.knot_surgery(manifolds.elliptic_surface(2),
                                         builtin_knot('trefoil'))):
            glued = manifolds.fiber_sum(z, e0)
            self.assertEqual(glued.series, z.series)
            self.assertEqual(glued.kappa_multiple, z.kappa_multiple)

    def test_k3_and_figure8(self):
        glued = manifolds.fiber_sum(manifolds.elliptic_surface(2),
                                    manifolds.mapping_torus(FIGURE8))
        self.assertEqual(glued.series, RationalFunction(FIGURE8_POLY))
        self.assertEqual(glued.monodromy_genus, 1)

    def test_monodromy_genera_add(self):
        composite = builtin_knot('figure8#trefoil')
        glued = manifolds.fiber_sum(
            manifolds.mapping_torus(FIGURE8),
            manifolds.mapping_torus(composite.monodromy))
        self.assertEqual(glued.completeness, FULL)
        self.assertEqual(glued.monodromy_genus, 3)
        self.assertEqual(
            glued.series,
            RationalFunction(FIGURE8_POLY ** 2 * TREFOIL_POLY,
                             Polynomial([1, -2, 1])))
        audit = manifolds.audit_record(glued)
        self.assertTrue(audit['degree_normalized'])
        self.assertTrue(audit['palindromic'])
        self.assertTrue(audit['passed'])

    def test_completeness_is_the_lesser(self):
        glued = manifolds.fiber_sum(manifolds.elliptic_surface(1),
                                    manifolds.elliptic_surface(3))
        self.assertEqual(glued.completeness, PARTIAL)

    def test_incompatible_fibers(self):
        genus_two = ManifoldInvariant('Y', 2, 2, 0, RationalFunction([1]))
        with self.assertRaises(IncompatibleFibersError):
            manifolds.fiber_sum(manifolds.elliptic_surface(2), genus_two)

    def test_four_manifolds_only(self):
        product = manifolds.sphere_product(manifolds.elliptic_surface(2))
        with self.assertRaises(DomainError):
            manifolds.fiber_sum(product, manifolds.elliptic_surface(2))


class KnotSurgeryTest(SymzetaTestCase):

    def setUp(self):
        super(KnotSurgeryTest, self).setUp(manifolds, TO_PATCH)
        self.figure8 = builtin_knot('figure8')

    def test_k3_figure8(self):
        r = manifolds.knot_surgery(manifolds.elliptic_surface(2),
                                   self.figure8)
        self.assertEqual(r.name, 'E(2,figure8)')
        self.assertEqual(r.series, RationalFunction(FIGURE8_POLY))
        self.assertEqual(r.completeness, FULL)
        self.assertTrue(r.sw_equal)
        self.assertIn('homotopy equivalent to E(2)', r.notes)

    def test_e3_figure8(self):
        r = manifolds.knot_surgery(manifolds.elliptic_surface(3),
                                   self.figure8)
        self.assertEqual(r.series,
                         RationalFunction(Polynomial([1, -1]) * FIGURE8_POLY))
        self.assertEqual(r.kappa_multiple, 3)

    def test_rational_surface_is_partial(self):
        r = manifolds.knot_surgery(manifolds.elliptic_surface(1),
                                   self.figure8)
        self.assertEqual(r.series, RationalFunction(FIGURE8_POLY, [1, -1]))
        self.assertEqual(r.completeness, PARTIAL_WITH_SW_NOTE)
        self.assertFalse(r.sw_equal)
        self.assertIn('Seiberg-Witten', r.notes[0])

    def test_formal_e0_surgery_has_no_sw_note(self):
        r = manifolds.knot_surgery(manifolds.elliptic_surface(0),
                                   self.figure8)
        self.assertEqual(r.completeness, PARTIAL)
        self.assertFalse(any('Seiberg-Witten' in note for note in r.notes))
        x = manifolds.knot_surgery(manifolds.mapping_torus(THURSTON),
                                   self.figure8)
        self.assertEqual(x.completeness, PARTIAL)
        self.assertFalse(any('Seiberg-Witten' in note for note in x.notes))

    def test_matrix_input(self):
        r = manifolds.knot_surgery(manifolds.elliptic_surface(2), TREFOIL)
        self.assertEqual(r.name, 'E(2,f)')
        self.assertEqual(r.series, RationalFunction(TREFOIL_POLY))

    def test_hypothesis(self):
        with self.assertRaises(HypothesisError):
            manifolds.knot_surgery(manifolds.elliptic_surface(2), THURSTON)

    def test_routes_agree(self):
        rng = seeded(23)
        for n in range(0, 5):
            z = manifolds.elliptic_surface(n)
            f = random_gated_monodromy(rng, 2)
            r = manifolds.knot_surgery(z, f)
            glued = manifolds.fiber_sum(z, manifolds.mapping_torus(f))
            self.assertEqual(r.series, glued.series)
            self.assertEqual(r.kappa_multiple, n - 2 + 2 + 2)


class ProductTest(SymzetaTestCase):

    def setUp(self):
        super(ProductTest, self).setUp(manifolds, TO_PATCH)
        self.e2k = manifolds.knot_surgery(manifolds.elliptic_surface(2),
                                          builtin_knot('figure8'))

    def test_sphere(self):
        p = manifolds.sphere_product(self.e2k)
        self.assertEqual(p.name, 'E(2,figure8)xS2')
        self.assertEqual(p.complex_dim, 3)
        self.assertEqual(p.series, RationalFunction(FIGURE8_POLY ** 2))
        self.assertEqual(p.completeness, PARTIAL)
        self.assertEqual(p.label, manifolds.GENUS_ONE_PARTIAL)
        self.assertEqual(p.kappa_multiple, self.e2k.kappa_multiple)

    def test_torus(self):
        p = manifolds.sphere_product(self.e2k, euler=0)
        self.assertEqual(p.series, RationalFunction([1]))
        self.assertEqual(p.name, 'E(2,figure8)xY(chi=0)')

    def test_e3k(self):
        e3k = manifolds.knot_surgery(manifolds.elliptic_surface(3),
                                     builtin_knot('trefoil'))
        self.assertEqual(
            manifolds.sphere_product(e3k).series,
            RationalFunction(TREFOIL_POLY ** 2 * Polynomial([1, -1]) ** 2))


class CanonicalClassTest(SymzetaTestCase):

    def setUp(self):
        super(CanonicalClassTest, self).setUp(manifolds, TO_PATCH)

    def test_adjunction(self):
        self.assertTrue(manifolds.adjunction_check(0, 1, 0))
        for genus in range(0, 4):
            for n in range(0, 4):
                self.assertTrue(
                    manifolds.adjunction_check(2 * genus - 2 + n, genus, -n))
        self.assertFalse(manifolds.adjunction_check(1, 1, 0))

    def test_canonical_class(self):
        report = manifolds.canonical_class(manifolds.elliptic_surface(3))
        self.assertEqual(report['kappa'], '1F')
        self.assertEqual(report['kappa_dot_class'], 0)
        self.assertNotIn('adjunction', report)
        report = manifolds.canonical_class(
            manifolds.mapping_torus(Matrix.identity(4)))
        self.assertEqual(report['kappa'], '2T')
        self.assertEqual(
            manifolds.canonical_class(manifolds.elliptic_surface(2))['kappa'],
            '0')

    def test_audit_needs_monodromy(self):
        with self.assertRaises(DomainError):
            manifolds.audit_record(manifolds.elliptic_surface(2))


class DistinguishTest(SymzetaTestCase):

    def setUp(self):
        super(DistinguishTest, self).setUp(manifolds, TO_PATCH)
        e2 = manifolds.elliptic_surface(2)
        self.e2_figure8 = manifolds.knot_surgery(e2, builtin_knot('figure8'))
        self.e2_trefoil = manifolds.knot_surgery(e2, builtin_knot('trefoil'))

    def test_knots_differ(self):
        report = manifolds.distinguish(self.e2_trefoil, self.e2_figure8, 4)
        self.assertFalse(report['equal'])
        self.assertEqual(report['power'], 1)
        self.assertEqual(report['coefficients'], [-1, -3])

    def test_equal(self):
        report = manifolds.distinguish(self.e2_figure8, self.e2_figure8, 8)
        self.assertTrue(report['equal'])
        self.assertEqual(report['order'], 8)

    def test_mapping_torus_against_e0(self):
        report = manifolds.distinguish(manifolds.mapping_torus(FIGURE8),
                                       manifolds.elliptic_surface(0), 2)
        self.assertEqual(report['power'], 1)
        self.assertEqual(report['coefficients'], [-1, 2])

    def test_negative_order(self):
        with self.assertRaises(DomainError):
            manifolds.distinguish(self.e2_figure8, self.e2_figure8, -1)


class RecordTest(SymzetaTestCase):

    def setUp(self):
        super(RecordTest, self).setUp(manifolds, TO_PATCH)

    def test_unknown_completeness(self):
        with self.assertRaises(ValidationError):
            ManifoldInvariant('X', 2, 1, 0, completeness='most')

    def test_series_is_canonical(self):
        r = ManifoldInvariant('X', 2, 1, 0,
                              RationalFunction([2, -2], [2], canonical=False))
        self.assertTrue(r.series.is_canonical())
