from django.test import SimpleTestCase
from django.urls import reverse
from rest_framework import status
from rest_framework.test import APITestCase

from polyalg.chebyshev import chebyshev_j
from polyalg.exceptions import NonZeroRemainder
from polyalg.polynomial import IntPolynomial, ZERO, X, X_MINUS_2
from .exceptions import MalformedMatrix, NotDivisible
from .matrix import (
    KnotMatrix, validate, components, permutation_decompositions,
    brute_force_decompositions, char_poly, conway_number_from_poly,
)

TREFOIL = KnotMatrix(((0, 1, 1), (1, 0, 1), (1, 1, 0)))
HOPF = KnotMatrix(((0, 2), (2, 0)))
KINK = KnotMatrix(((2,),))
TWIST_TWO = KnotMatrix(((1, 1), (1, 1)))


class ValidateTestCase(SimpleTestCase):
    def test_valid_matrices(self):
        """Test Hopf, single kink and trefoil matrices are accepted"""
        for matrix in (HOPF, KINK, TREFOIL, KnotMatrix()):
            self.assertTrue(validate(matrix))

    def test_identity_rejected(self):
        """Test the identity fails with row and column diagnostics"""
        report = validate(KnotMatrix(((1, 0), (0, 1))))
        self.assertFalse(report)
        self.assertIn("row 0 sums to 1", report.problems)
        self.assertIn("column 1 sums to 1", report.problems)

    def test_entry_out_of_range(self):
        """Test entries above 2 are reported"""
        report = validate(KnotMatrix(((3, -1), (-1, 3))))
        self.assertFalse(report.ok)
        self.assertTrue(any("not in" in problem for problem in report.problems))

    def test_ragged_rows(self):
        """Test a non-square matrix is rejected"""
        self.assertFalse(validate(KnotMatrix(((2, 0),))))

    def test_ones_vector_is_eigenvector(self):
        """Test M*1 = 2*1 on a valid matrix"""
        self.assertEqual(TREFOIL.ones_product(), (2, 2, 2))

    def test_json_form(self):
        """Test the {v, entries} form is read back and a wrong v is rejected"""
        self.assertEqual(KnotMatrix.from_json(TREFOIL.to_json()), TREFOIL)
        with self.assertRaises(MalformedMatrix):
            KnotMatrix.from_json({'v': 3, 'entries': [[2]]})


class ComponentsTestCase(SimpleTestCase):
    def test_trefoil_single_component(self):
        """Test the trefoil walk closes over all six edges"""
        cycles = components(TREFOIL)
        self.assertEqual(len(cycles), 1)
        self.assertEqual(len(cycles[0]), 6)

    def test_hopf_two_components(self):
        """Test each entry 2 of the Hopf link closes on itself"""
        cycles = components(HOPF)
        self.assertEqual(len(cycles), 2)
        self.assertTrue(all(len(cycle) == 2 for cycle in cycles))

    def test_block_diagonal(self):
        """Test disjoint blocks give separate components"""
        self.assertEqual(len(components(TREFOIL.block_diagonal(TREFOIL))), 2)

    def test_partition_covers_edges(self):
        """Test cycles are disjoint, even and cover all 2V edges"""
        matrix = TREFOIL.block_diagonal(TWIST_TWO).block_diagonal(HOPF)
        cycles = components(matrix)
        flat = [edge for cycle in cycles for edge in cycle]
        self.assertEqual(len(flat), 2 * matrix.size)
        self.assertEqual(len(set(flat)), len(flat))
        self.assertTrue(all(len(cycle) % 2 == 0 for cycle in cycles))

    def test_malformed_raises(self):
        """Test the walk refuses an invalid matrix"""
        with self.assertRaises(MalformedMatrix):
            components(KnotMatrix(((1, 0), (0, 1))))


class DecompositionTestCase(SimpleTestCase):
    def test_trefoil_unique(self):
        """Test a proper knot has exactly one unordered decomposition"""
        decompositions = permutation_decompositions(TREFOIL)
        self.assertEqual(len(decompositions), 1)
        p, q = decompositions[0].matrices()
        summed = tuple(tuple(a + b for a, b in zip(rp, rq)) for rp, rq in zip(p, q))
        self.assertEqual(summed, TREFOIL.entries)

    def test_hopf_forced_split(self):
        """Test entry 2 splits as 1 + 1 into equal permutations"""
        decompositions = permutation_decompositions(HOPF)
        self.assertEqual(len(decompositions), 1)
        self.assertEqual(decompositions[0].p, decompositions[0].q)

    def test_matches_brute_force(self):
        """Test the walk colouring agrees with exhaustive enumeration"""
        samples = [
            TREFOIL, HOPF, KINK, TWIST_TWO,
            TREFOIL.block_diagonal(TREFOIL),
            TWIST_TWO.block_diagonal(TWIST_TWO).block_diagonal(KINK),
            HOPF.block_diagonal(HOPF),
        ]
        for matrix in samples:
            self.assertEqual(permutation_decompositions(matrix), brute_force_decompositions(matrix))

    def test_independent_components(self):
        """Test two trefoils side by side give two unordered pairs"""
        self.assertEqual(len(permutation_decompositions(TREFOIL.block_diagonal(TREFOIL))), 2)


class CharPolyTestCase(SimpleTestCase):
    def test_known_polynomials(self):
        """Test trefoil, Hopf and single kink polynomials"""
        self.assertEqual(char_poly(TREFOIL), X_MINUS_2 * (X + 1) ** 2)
        self.assertEqual(char_poly(HOPF), X * X - 4)
        self.assertEqual(char_poly(KINK), X_MINUS_2)
        self.assertEqual(char_poly(TWIST_TWO), X_MINUS_2 * chebyshev_j(1))

    def test_unknot_zero(self):
        """Test the empty matrix has the zero polynomial"""
        self.assertEqual(char_poly(KnotMatrix()), ZERO)

    def test_vanishes_at_two(self):
        """Test P(2) = 0 for valid matrices"""
        for matrix in (TREFOIL, HOPF, KINK, TWIST_TWO):
            self.assertEqual(char_poly(matrix)(2), 0)

    def test_block_product(self):
        """Test a block-diagonal matrix multiplies block polynomials"""
        self.assertEqual(
            char_poly(TREFOIL.block_diagonal(HOPF)),
            char_poly(TREFOIL) * char_poly(HOPF),
        )

    def test_relabel_invariance(self):
        """Test a simultaneous row and column permutation keeps the polynomial"""
        matrix = TREFOIL.block_diagonal(KINK)
        self.assertEqual(char_poly(matrix.permuted((3, 0, 2, 1))), char_poly(matrix))


class ConwayNumberTestCase(SimpleTestCase):
    def test_trefoil(self):
        """Test the trefoil has Conway number 3"""
        self.assertEqual(conway_number_from_poly(X_MINUS_2 * (X + 1) ** 2, 3), 3)

    def test_simple_twists(self):
        """Test every simple twist has Conway number 1"""
        for v in range(1, 13):
            self.assertEqual(conway_number_from_poly(X_MINUS_2 * chebyshev_j(v - 1), v), 1)

    def test_figure_eight(self):
        """Test x^4 - 2x^2 - 4x with four crossings gives 5"""
        poly = IntPolynomial((0, -4, -2, 0, 1))
        self.assertEqual(conway_number_from_poly(poly, 4), 5)

    def test_conventions(self):
        """Test the unknot and separated-component conventions"""
        self.assertEqual(conway_number_from_poly(ZERO, 0), 1)
        self.assertEqual(conway_number_from_poly(ZERO, 6), 0)

    def test_errors(self):
        """Test missing factor and non-divisible derivative"""
        with self.assertRaises(NonZeroRemainder):
            conway_number_from_poly(X * X + 1, 2)
        with self.assertRaises(NotDivisible):
            conway_number_from_poly(X_MINUS_2 * (X + 1) ** 2, 2)


class KnotsAPITestCase(APITestCase):
    def test_charpoly_from_gauss(self):
        """Test the charpoly endpoint on the trefoil code"""
        url = reverse('knotgraph:charpoly')
        response = self.client.post(url, {'gauss': 'O1 U2 O3 U1 O2 U3'}, format='json')

        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response.data['polynomial'], 'x^3 - 3*x - 2')
        self.assertEqual(response.data['crossings'], 3)
        self.assertEqual(response.data['pd'], '')

    def test_charpoly_pd_from_spec(self):
        """Test a family spec also returns its PD text"""
        url = reverse('knotgraph:charpoly')
        response = self.client.post(url, {'spec': 'twist:1'}, format='json')

        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response.data['pd'], 'PD[X[1,1,2,2]]')

    def test_conway_from_spec(self):
        """Test the conway endpoint on a family spec"""
        url = reverse('knotgraph:conway')
        response = self.client.post(url, {'spec': 'rational:4,3'}, format='json')

        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response.data['conway'], 13)
        self.assertEqual(response.data['crossings'], 7)

    def test_components_hopf(self):
        """Test the components endpoint reports two cycles for Hopf"""
        url = reverse('knotgraph:components')
        response = self.client.post(url, {'gauss': 'O1 U2 ; O2 U1'}, format='json')

        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response.data['count'], 2)

    def test_decompose_trefoil(self):
        """Test the decompose endpoint"""
        url = reverse('knotgraph:decompose')
        response = self.client.post(url, {'spec': 'torus:3'}, format='json')

        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response.data['count'], 1)

    def test_requires_one_source(self):
        """Test both or neither input source is a 400"""
        url = reverse('knotgraph:charpoly')
        response = self.client.post(url, {}, format='json')
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)

        response = self.client.post(url, {'gauss': 'O1 U1', 'spec': 'twist:1'}, format='json')
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)

    def test_bad_gauss_code(self):
        """Test a non-alternating code is reported as an error"""
        url = reverse('knotgraph:charpoly')
        response = self.client.post(url, {'gauss': 'O1 O2 U1 U2'}, format='json')

        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
        self.assertIn('error', response.data)

    def test_crossing_limit(self):
        """Test diagrams above the configured crossing limit are refused"""
        url = reverse('knotgraph:charpoly')
        with self.settings(KNOT_MAX_CROSSINGS=4):
            response = self.client.post(url, {'spec': 'torus:5'}, format='json')

        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
