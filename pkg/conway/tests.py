import sympy
from django.test import SimpleTestCase
from django.urls import reverse
from rest_framework import status
from rest_framework.test import APITestCase

from diagrams.builders import build_twist_chain, build_cyclic_torus, build_rational, compose_knots
from diagrams.exceptions import EmptyDiagram
from diagrams.tangles import Diagram, UNKNOT, disjoint_union
from diagrams.expressions import H, V, tangle_fraction
from .catalog import (
    CatalogEntry, PRINTED_FORMULAS, catalog, catalog_json, rational_entry, realize, representative_diagram,
)
from .exceptions import ArityMismatch, OutOfRange, EmptyVector, NoRealization, NotMultilinear, ConwaySyntaxError
from .functions import (
    ConwayFunction, ribbon_symbols, parse_conway_function, gauss_bracket_numerator,
    gauss_bracket_denominator, gauss_bracket_function,
)
from .invariants import conway_from_diagram

DETERMINANTS = {
    'single twist': 1,
    'Hopf link': 2,
    'trefoil 3_1': 3,
    'Solomon 4_1^2': 4,
    'figure-eight 4_1': 5,
    'cinquefoil 5_1': 5,
    'three-twist 5_2': 7,
    'Whitehead link 5_1^2': 8,
}


class ConwayFunctionTestCase(SimpleTestCase):
    def setUp(self):
        self.pretzel = ConwayFunction.from_text("a1*a2 + a2*a3 + a3*a1", 3)

    def test_evaluate(self):
        """Test evaluation and term count"""
        self.assertEqual(self.pretzel.evaluate([1, 1, 1]), 3)
        self.assertEqual(self.pretzel.evaluate([2, 3, 4]), 26)
        self.assertEqual(self.pretzel.term_count(), 3)
        with self.assertRaises(ArityMismatch):
            self.pretzel.evaluate([1, 1])

    def test_text_form(self):
        """Test formatting and parsing of the +a1*a2 form"""
        self.assertEqual(str(self.pretzel), "+a1*a2 +a1*a3 +a2*a3")
        self.assertEqual(parse_conway_function(str(self.pretzel)), self.pretzel)
        hopf = parse_conway_function("+a1*a2 +1")
        self.assertEqual(hopf.n, 2)
        self.assertEqual(hopf.evaluate([2, 3]), 7)

    def test_text_errors(self):
        """Test malformed and repeated terms"""
        with self.assertRaises(ConwaySyntaxError):
            parse_conway_function("a1*a2")
        with self.assertRaises(NotMultilinear):
            parse_conway_function("+a1 +a1")
        with self.assertRaises(ArityMismatch):
            parse_conway_function("+a3", 2)

    def test_not_multilinear(self):
        """Test squares and coefficients other than one are rejected"""
        with self.assertRaises(NotMultilinear):
            ConwayFunction.from_text("a1**2 + a2", 2)
        with self.assertRaises(NotMultilinear):
            ConwayFunction.from_text("2*a1*a2", 2)

    def test_specialize_zero(self):
        """Test setting a variable to zero drops and renumbers"""
        reduced = self.pretzel.specialize_zero(2)
        self.assertEqual(reduced.n, 2)
        self.assertEqual(reduced.terms, frozenset({frozenset({1, 2})}))
        with self.assertRaises(ArityMismatch):
            self.pretzel.specialize_zero(4)

    def test_term_parity(self):
        """Test parity classification of monomials"""
        self.assertEqual(self.pretzel.term_parity(), 'even')
        self.assertEqual(ConwayFunction.from_text("a1*a2*a3 + a1 + a3", 3).term_parity(), 'odd')
        self.assertEqual(ConwayFunction.from_text("a1*a2 + a1", 2).term_parity(), 'mixed')


class GaussBracketTestCase(SimpleTestCase):
    def test_bracket(self):
        """Test (2, 1, 2) gives 8/3"""
        self.assertEqual(gauss_bracket_numerator([2, 1, 2]), 8)
        self.assertEqual(gauss_bracket_denominator([2, 1, 2]), 3)
        self.assertEqual(gauss_bracket_numerator([5]), 5)
        self.assertEqual(gauss_bracket_denominator([5]), 1)

    def test_empty(self):
        """Test empty vectors are rejected"""
        with self.assertRaises(EmptyVector):
            gauss_bracket_numerator([])
        with self.assertRaises(EmptyVector):
            gauss_bracket_function(0)

    def test_rational_entries(self):
        """Test each rational catalog entry is the symbolic bracket"""
        for n in range(1, 6):
            self.assertEqual(rational_entry(n).function, gauss_bracket_function(n))


class CatalogTestCase(SimpleTestCase):
    def test_counts(self):
        """Test the number of families per ribbon count"""
        self.assertEqual([len(catalog(n)) for n in range(1, 6)], [1, 1, 2, 5, 12])
        with self.assertRaises(OutOfRange):
            catalog(6)
        with self.assertRaises(OutOfRange):
            catalog(0)

    def test_term_counts(self):
        """Test monomial counts of the four and five ribbon families"""
        self.assertEqual([entry.term_count() for entry in catalog(4)], [4, 4, 5, 5, 5])
        self.assertEqual(
            [entry.term_count() for entry in catalog(5)],
            [5, 5, 7, 7, 7, 7, 8, 8, 8, 8, 8, 8],
        )

    def test_uniform_parity(self):
        """Test no family mixes odd and even monomials"""
        for n in range(1, 6):
            for entry in catalog(n):
                self.assertNotEqual(entry.function.term_parity(), 'mixed', entry.formula)

    def test_representatives(self):
        """Test the all-ones value is the representative's determinant"""
        for n in range(1, 6):
            for entry in catalog(n):
                self.assertEqual(entry.function.all_ones(), DETERMINANTS[entry.representative], entry.formula)

    def test_catalog_json(self):
        """Test the JSON form lists sorted index sets per entry"""
        records = catalog_json(2)
        self.assertEqual(records, [{
            'ribbons': 2,
            'terms': [[1, 2], []],
            'representative': 'Hopf link',
            'rational': True,
        }])

    def test_tangle_fraction(self):
        """Test the fraction of the figure-eight pair-plus-T expression"""
        expr = (V(1) + V(2)) + H(3) * V(4)
        self.assertEqual(tangle_fraction(expr, [1, 1, 1, 1]), (5, 2))
        self.assertEqual(tangle_fraction(expr, [2, 1, 3, 1])[0], 18)

    def test_printed_repeated_term(self):
        """Test the printed twelfth five-ribbon formula repeats a monomial"""
        with self.assertRaises(NotMultilinear):
            ConwayFunction.from_text(PRINTED_FORMULAS[(5, 12)], 5)

    def test_realizations_symbolic(self):
        """Test each tangle expression's fraction numerator is the family function"""
        for n in range(1, 6):
            symbols = ribbon_symbols(n)
            for entry in catalog(n):
                numerator, _ = entry.realization.fraction(symbols)
                self.assertEqual(sympy.expand(numerator - entry.function.as_expr()), 0, entry.formula)

    def test_realizations_on_diagrams(self):
        """Test the built diagrams have the Conway numbers the functions predict"""
        for n in range(1, 6):
            for entry in catalog(n):
                self.assertEqual(
                    conway_from_diagram(representative_diagram(entry)),
                    DETERMINANTS[entry.representative],
                    entry.formula,
                )
                twos = [2] * n
                self.assertEqual(
                    conway_from_diagram(realize(entry, twos)),
                    entry.function.evaluate(twos),
                    entry.formula,
                )

    def test_missing_realization(self):
        """Test entries without a construction cannot be realized"""
        entry = CatalogEntry(ribbons=2, function=gauss_bracket_function(2), representative='Hopf link')
        with self.assertRaises(NoRealization):
            realize(entry, [1, 1])


class ConwayNumberTestCase(SimpleTestCase):
    def test_twist_insensitive(self):
        """Test every twist chain is an unknot"""
        for v in range(1, 7):
            self.assertEqual(conway_from_diagram(build_twist_chain(v)), 1)

    def test_multiplicative(self):
        """Test composition multiplies Conway numbers"""
        trefoil = build_cyclic_torus(3)
        figure_eight = build_rational([2, 2])
        self.assertEqual(conway_from_diagram(figure_eight), 5)
        self.assertEqual(conway_from_diagram(compose_knots(trefoil, figure_eight)), 15)

    def test_split_diagrams(self):
        """Test separated pieces give zero"""
        trefoil = build_cyclic_torus(3)
        self.assertEqual(conway_from_diagram(disjoint_union(trefoil, trefoil)), 0)
        self.assertEqual(conway_from_diagram(disjoint_union(trefoil, UNKNOT)), 0)
        self.assertEqual(conway_from_diagram(Diagram((), loops=2)), 0)

    def test_unknot(self):
        """Test the free circle and the empty diagram"""
        self.assertEqual(conway_from_diagram(UNKNOT), 1)
        with self.assertRaises(EmptyDiagram):
            conway_from_diagram(Diagram((), loops=0))


class ConwayAPITestCase(APITestCase):
    def test_catalog(self):
        """Test the four-ribbon catalog listing"""
        response = self.client.get(reverse('conway:catalog', kwargs={'n': 4}))

        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response.data['count'], 5)
        self.assertEqual(response.data['results'][4]['function'], "+a1*a2*a3*a4 +a1*a2 +a1*a4 +a3*a4 +1")
        self.assertTrue(response.data['results'][4]['rational'])

    def test_catalog_out_of_range(self):
        """Test ribbon counts without data are 400s"""
        response = self.client.get(reverse('conway:catalog', kwargs={'n': 6}))
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)

    def test_bracket(self):
        """Test the bracket of (2, 1, 2)"""
        response = self.client.get(reverse('conway:bracket'), {'a': '2,1,2'})

        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response.data['fraction'], '8/3')

        response = self.client.get(reverse('conway:bracket'), {'a': '1,0'})
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)

    def test_evaluate(self):
        """Test evaluating a posted function"""
        url = reverse('conway:evaluate')
        response = self.client.post(url, {'function': '+a1*a2 +1', 'a': '2,3'}, format='json')

        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response.data['value'], 7)

        response = self.client.post(url, {'function': 'a1', 'a': '2'}, format='json')
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
