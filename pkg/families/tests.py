import itertools

from django.test import SimpleTestCase
from django.urls import reverse
from rest_framework import status
from rest_framework.test import APITestCase

from diagrams.builders import build_twist_chain, build_cyclic_torus, quartet
from diagrams.utils import diagram_to_matrix
from knot_algebra.exceptions import KnotAlgebraError
from knotgraph.matrix import char_poly
from polyalg.chebyshev import chebyshev_j
from polyalg.exceptions import NonZeroRemainder
from polyalg.polynomial import X, X_MINUS_2, IntPolynomial
from .closed_forms import (
    FamilyId, FamilyName, family_poly, torus_factored_form, family_diagram, crossing_count,
)
from .exceptions import UnknownFamily, FamilyArityMismatch
from .recurrences import check_recurrence, link_relation_check


def member(name, *params):
    return family_poly(FamilyId(name, params))


def diagram_poly(family):
    return char_poly(diagram_to_matrix(family_diagram(family)))


class FamilyIdTestCase(SimpleTestCase):
    def test_lookup_by_name(self):
        """Test family names are matched loosely"""
        self.assertEqual(FamilyName.lookup('TwoRibbon'), FamilyName.TWO_RIBBON)
        self.assertEqual(FamilyName.lookup('three_ribbon_mixed'), FamilyName.THREE_RIBBON_MIXED)
        with self.assertRaises(UnknownFamily):
            FamilyName.lookup('FourRibbon')

    def test_arity(self):
        """Test parameter counts per family"""
        with self.assertRaises(FamilyArityMismatch):
            FamilyId(FamilyName.TWO_RIBBON, (1, 2, 3))
        with self.assertRaises(FamilyArityMismatch):
            FamilyId(FamilyName.CYCLIC_TORUS, (0,))
        self.assertEqual(crossing_count(FamilyId('CompositionThree', (2, 3, 4))), 9)


class ClosedFormTestCase(SimpleTestCase):
    def test_examples(self):
        """Test Hopf, the Whitehead member and the figure-eight"""
        self.assertEqual(member(FamilyName.TWO_RIBBON, 1, 1), X ** 2 - 4)
        whitehead = member(FamilyName.THREE_RIBBON_MIXED, 2, 2, 1)
        self.assertEqual(whitehead, X ** 5 - 2 * X ** 3 - 4 * X ** 2)
        self.assertEqual(whitehead.derivative()(2), 40)
        self.assertEqual(member(FamilyName.THREE_RIBBON_PARALLEL, 2, 1, 1), X ** 4 - 2 * X ** 2 - 4 * X)

    def test_compositions(self):
        """Test the composition closed forms on small members"""
        self.assertEqual(member(FamilyName.COMPOSITION_TWO, 1, 1), X ** 2 - 2 * X)
        self.assertEqual(member(FamilyName.COMPOSITION_TWO, 3, 3).derivative()(2), 54)
        self.assertEqual(member(FamilyName.COMPOSITION_THREE, 1, 1, 1), X_MINUS_2 * (X ** 2 - 1))

    def test_torus_factored(self):
        """Test the odd and even factorizations for v up to 16"""
        self.assertEqual(torus_factored_form(1), X_MINUS_2)
        self.assertEqual(torus_factored_form(3), X_MINUS_2 * (X + 1) ** 2)
        self.assertEqual(torus_factored_form(4), (X ** 2 - 4) * X ** 2)
        for v in range(1, 17):
            self.assertEqual(member(FamilyName.CYCLIC_TORUS, v), torus_factored_form(v))

    def test_vanish_at_two(self):
        """Test every closed form carries the factor x-2"""
        for name in FamilyName:
            for params in itertools.product(range(1, 4), repeat=name.arity):
                poly = member(name, *params)
                self.assertEqual(poly(2), 0, f"{name.value}{params}")
                poly.div_exact(X_MINUS_2)

    def test_symmetries(self):
        """Test k,l symmetry of the mixed family and full symmetry of the parallel one"""
        for k, l, m in itertools.product(range(1, 4), repeat=3):
            self.assertEqual(
                member(FamilyName.THREE_RIBBON_MIXED, k, l, m),
                member(FamilyName.THREE_RIBBON_MIXED, l, k, m),
            )
            reference = member(FamilyName.THREE_RIBBON_PARALLEL, k, l, m)
            for perm in itertools.permutations((k, l, m)):
                self.assertEqual(member(FamilyName.THREE_RIBBON_PARALLEL, *perm), reference)


class DiagramAgreementTestCase(SimpleTestCase):
    def assertFamilyMatches(self, name, bound):
        for params in itertools.product(range(1, bound + 1), repeat=name.arity):
            family = FamilyId(name, params)
            self.assertEqual(family_poly(family), diagram_poly(family), str(family))

    def test_single_ribbon_families(self):
        """Test twist and torus closed forms against built diagrams up to 12"""
        for v in range(1, 13):
            for name in (FamilyName.TWIST_CIRCLE, FamilyName.CYCLIC_TORUS):
                family = FamilyId(name, (v,))
                self.assertEqual(family_poly(family), diagram_poly(family), str(family))

    def test_two_ribbon(self):
        """Test the two-ribbon closed form against rational diagrams"""
        self.assertFamilyMatches(FamilyName.TWO_RIBBON, 4)

    def test_three_ribbon_mixed(self):
        """Test the mixed closed form against rational (k, m, l) diagrams"""
        self.assertFamilyMatches(FamilyName.THREE_RIBBON_MIXED, 3)

    def test_three_ribbon_parallel(self):
        """Test the parallel closed form against pretzel diagrams"""
        self.assertFamilyMatches(FamilyName.THREE_RIBBON_PARALLEL, 3)

    def test_composition_two(self):
        """Test the two-factor composition against composed torus diagrams"""
        self.assertFamilyMatches(FamilyName.COMPOSITION_TWO, 4)

    def test_composition_three(self):
        """Test the three-factor composition against composition chains"""
        self.assertFamilyMatches(FamilyName.COMPOSITION_THREE, 3)


class RecurrenceTestCase(SimpleTestCase):
    def test_twist_family_homogeneous(self):
        """Test twists satisfy the homogeneous recurrence"""
        triple = [member(FamilyName.TWIST_CIRCLE, v) for v in (1, 2, 3)]
        self.assertTrue(check_recurrence(*triple).homogeneous)

    def test_torus_source(self):
        """Test the torus family has source H = 2 from any start"""
        for start in range(1, 8):
            triple = [member(FamilyName.CYCLIC_TORUS, v) for v in (start, start + 1, start + 2)]
            source = check_recurrence(*triple)
            self.assertFalse(source.homogeneous)
            self.assertEqual(source.H, IntPolynomial.constant(2))

    def test_two_ribbon_source(self):
        """Test lengthening one ribbon gives H = 2 J_{j-1}"""
        for j in range(1, 4):
            for start in range(1, 5):
                triple = [member(FamilyName.TWO_RIBBON, j, k) for k in (start, start + 1, start + 2)]
                source = check_recurrence(*triple)
                self.assertEqual(source.H, 2 * chebyshev_j(j - 1))
                shifted = [p + source.H for p in triple]
                self.assertEqual(shifted[2] - X * shifted[1] + shifted[0], IntPolynomial())

    def test_not_a_family(self):
        """Test unrelated polynomials raise a library error and log the residual"""
        with self.assertLogs('families.recurrences', level='WARNING') as logs:
            with self.assertRaises(NonZeroRemainder) as ctx:
                check_recurrence(X, X ** 2, X ** 3 + 1)
        self.assertIsInstance(ctx.exception, KnotAlgebraError)
        self.assertIn('no factor x-2', logs.output[0])


class LinkRelationTestCase(SimpleTestCase):
    def polys(self, first, second):
        return {name: char_poly(diagram_to_matrix(d)) for name, d in quartet(first, second).items()}

    def test_trefoil_pair(self):
        """Test the four-polynomial relation on two trefoils"""
        trefoil = build_cyclic_torus(3)
        p = self.polys(trefoil, trefoil)
        self.assertTrue(link_relation_check(p['factor'], p['composition'], p['twist'], p['link']))

    def test_small_pairs(self):
        """Test the relation over twist and torus members"""
        pool = [build_twist_chain(1), build_twist_chain(2), build_cyclic_torus(2), build_cyclic_torus(3)]
        for first, second in itertools.product(pool, repeat=2):
            p = self.polys(first, second)
            self.assertTrue(link_relation_check(p['factor'], p['composition'], p['twist'], p['link']))

    def test_perturbation_fails(self):
        """Test the relation is strict equality"""
        p = self.polys(build_twist_chain(1), build_cyclic_torus(3))
        self.assertFalse(link_relation_check(p['factor'], p['composition'], p['twist'], p['link'] + 1))


class FamiliesAPITestCase(APITestCase):
    def test_family_poly(self):
        """Test the closed-form endpoint for the Hopf member"""
        url = reverse('families:family-poly')
        response = self.client.get(url, {'name': 'TwoRibbon', 'params': '1,1'})

        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response.data['polynomial'], 'x^2 - 4')
        self.assertEqual(response.data['conway'], 2)
        self.assertEqual(response.data['crossings'], 2)

    def test_family_poly_bad_input(self):
        """Test unknown names and wrong arity are 400s"""
        url = reverse('families:family-poly')
        response = self.client.get(url, {'name': 'FourRibbon', 'params': '1'})
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)

        response = self.client.get(url, {'name': 'TwoRibbon', 'params': '1'})
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)

        response = self.client.get(url, {'name': 'TwoRibbon', 'params': 'one,two'})
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)

    def test_torus(self):
        """Test the torus endpoint compares both forms"""
        url = reverse('families:torus', kwargs={'v': 3})
        response = self.client.get(url)

        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response.data['closed_form'], 'x^3 - 3*x - 2')
        self.assertTrue(response.data['equal'])
