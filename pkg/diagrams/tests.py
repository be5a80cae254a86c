from django.test import SimpleTestCase

from knotgraph.matrix import KnotMatrix, validate, components, char_poly, conway_number_from_poly
from polyalg.chebyshev import chebyshev_j
from polyalg.polynomial import X, X_MINUS_2
from .builders import (
    build_twist_chain, build_cyclic_torus, build_pretzel, build_rational,
    build_composition_chain, compose_knots, twist_composition,
    link_composition, quartet,
)
from .exceptions import (
    GaussSyntaxError, NonAlternating, BadCrossingUse, AlternationConflict,
    ClosureDisconnected, EmptyDiagram, InvalidRibbon, SpecSyntaxError,
)
from .expressions import H, V
from .gauss import OVER, UNDER, Visit, parse_gauss_code, to_matrix, relabel
from .specs import parse_family_spec, build_from_spec
from .tangles import (
    Diagram, Direction, UNKNOT, ribbon_tangle, infinity_tangle, join_ew,
    numerator_closure, disjoint_union, assign_alternation, to_pd,
)
from .utils import diagram_to_matrix

TREFOIL_CODE = "O1 U2 O3 U1 O2 U3"
TREFOIL_POLY = X_MINUS_2 * (X + 1) ** 2


def conway(diagram):
    return conway_number_from_poly(char_poly(diagram_to_matrix(diagram)), diagram.crossing_count)


class GaussCodeTestCase(SimpleTestCase):
    def test_parse_trefoil(self):
        """Test the trefoil code has one component and three crossings"""
        code = parse_gauss_code(TREFOIL_CODE)
        self.assertEqual(len(code.components), 1)
        self.assertEqual(code.crossing_count, 3)
        self.assertEqual(str(code), TREFOIL_CODE)

    def test_visit_fields(self):
        """Test each visit keeps its crossing id and its pass"""
        code = parse_gauss_code("O1 U2 O2 U1")
        self.assertEqual(code.components[0][0], Visit(crossing=1, passing=OVER))
        self.assertEqual(code.components[0][1], Visit(crossing=2, passing=UNDER))
        self.assertEqual(code.to_json(), [[[1, 'O'], [2, 'U'], [2, 'O'], [1, 'U']]])

    def test_parse_hopf(self):
        """Test components are separated by semicolons"""
        code = parse_gauss_code("O1 U2 ; O2 U1")
        self.assertEqual(len(code.components), 2)
        self.assertEqual(code.crossing_count, 2)

    def test_case_insensitive(self):
        """Test lower-case passes are accepted"""
        self.assertEqual(parse_gauss_code("o1 u2 o2 u1"), parse_gauss_code("O1 U2 O2 U1"))

    def test_non_alternating(self):
        """Test two consecutive overs are rejected"""
        with self.assertRaises(NonAlternating):
            parse_gauss_code("O1 O2 U1 U2")

    def test_single_token_component(self):
        """Test a one-visit component cannot alternate"""
        with self.assertRaises(NonAlternating):
            parse_gauss_code("O1 U2 ; O2 ; U1")

    def test_bad_crossing_use(self):
        """Test ids must be used once over and once under and be consecutive"""
        with self.assertRaises(BadCrossingUse):
            parse_gauss_code("O1 U2 O1 U2")
        with self.assertRaises(BadCrossingUse):
            parse_gauss_code("O1 U3 O3 U1")

    def test_syntax_error_names_token(self):
        """Test the diagnostic carries the offending token"""
        with self.assertRaises(GaussSyntaxError) as ctx:
            parse_gauss_code("O1 X2 O2 U1")
        self.assertEqual(ctx.exception.token, "X2")
        with self.assertRaises(GaussSyntaxError):
            parse_gauss_code("")

    def test_to_matrix(self):
        """Test the over-to-under edge rule on trefoil, kink and Hopf"""
        self.assertEqual(
            to_matrix(parse_gauss_code(TREFOIL_CODE)),
            KnotMatrix(((0, 1, 1), (1, 0, 1), (1, 1, 0))),
        )
        self.assertEqual(to_matrix(parse_gauss_code("O1 U1")), KnotMatrix(((2,),)))
        self.assertEqual(to_matrix(parse_gauss_code("O1 U2 ; O2 U1")), KnotMatrix(((0, 2), (2, 0))))

    def test_component_counts_agree(self):
        """Test Gauss components match the matrix walk"""
        for text in (TREFOIL_CODE, "O1 U2 ; O2 U1", "O1 U1", "O1 U2 O3 U1 O2 U3 ; O4 U4"):
            code = parse_gauss_code(text)
            matrix = to_matrix(code)
            self.assertTrue(validate(matrix))
            self.assertEqual(len(components(matrix)), len(code.components))

    def test_relabel_keeps_polynomial(self):
        """Test relabelling crossings leaves the polynomial unchanged"""
        code = parse_gauss_code("O1 U2 O3 U4 O2 U1 O4 U3")
        self.assertEqual(char_poly(to_matrix(relabel(code, [3, 1, 4, 2]))), char_poly(to_matrix(code)))
        with self.assertRaises(BadCrossingUse):
            relabel(code, [1, 1, 2, 3])


class BuilderTestCase(SimpleTestCase):
    def test_twist_chain_small(self):
        """Test the first twisted circles"""
        self.assertEqual(diagram_to_matrix(build_twist_chain(1)), KnotMatrix(((2,),)))
        self.assertEqual(diagram_to_matrix(build_twist_chain(2)), KnotMatrix(((1, 1), (1, 1))))
        self.assertEqual(
            diagram_to_matrix(build_twist_chain(3)),
            KnotMatrix(((1, 1, 0), (1, 0, 1), (0, 1, 1))),
        )

    def test_twist_chain_family(self):
        """Test P = (x-2) J_{V-1} for V up to 12"""
        for v in range(1, 13):
            matrix = diagram_to_matrix(build_twist_chain(v))
            self.assertEqual(char_poly(matrix), X_MINUS_2 * chebyshev_j(v - 1))

    def test_cyclic_torus(self):
        """Test trefoil and Solomon polynomials"""
        self.assertEqual(char_poly(diagram_to_matrix(build_cyclic_torus(3))), TREFOIL_POLY)
        self.assertEqual(char_poly(diagram_to_matrix(build_cyclic_torus(4))), X ** 4 - 4 * X ** 2)
        self.assertEqual(diagram_to_matrix(build_cyclic_torus(1)), KnotMatrix(((2,),)))
        self.assertEqual(diagram_to_matrix(build_cyclic_torus(2)), KnotMatrix(((0, 2), (2, 0))))

    def test_pretzel(self):
        """Test pretzels against the parallel ribbon Conway numbers"""
        self.assertEqual(char_poly(diagram_to_matrix(build_pretzel([1, 1, 1]))), TREFOIL_POLY)
        self.assertEqual(conway(build_pretzel([2, 1, 1])), 5)
        self.assertEqual(conway(build_pretzel([1, 1, 1, 1])), 4)
        self.assertEqual(conway(build_pretzel([3, 2])), 5)

    def test_rational(self):
        """Test rational knots against their Gauss brackets"""
        self.assertEqual(conway(build_rational([3])), 3)
        self.assertEqual(conway(build_rational([4, 3])), 13)
        self.assertEqual(conway(build_rational([2, 1, 1])), 5)
        self.assertEqual(
            char_poly(diagram_to_matrix(build_rational([2, 1, 2]))),
            X ** 5 - 2 * X ** 3 - 4 * X ** 2,
        )

    def test_rejects_zero_ribbons(self):
        """Test builders refuse non-positive ribbon counts"""
        with self.assertRaises(InvalidRibbon):
            build_twist_chain(0)
        with self.assertRaises(InvalidRibbon):
            build_rational([2, 0])
        with self.assertRaises(InvalidRibbon):
            build_pretzel([3])

    def test_composition_chain(self):
        """Test a chain of three torus members multiplies their Conway numbers"""
        self.assertEqual(conway(build_composition_chain([3, 1, 3])), 9)
        self.assertEqual(conway(build_composition_chain([3, 5])), 15)


class TangleTestCase(SimpleTestCase):
    def test_numerator_of_horizontal_ribbon(self):
        """Test N([3]) is the trefoil"""
        diagram = numerator_closure(ribbon_tangle(3, Direction.HORIZONTAL))
        self.assertEqual(char_poly(diagram_to_matrix(diagram)), TREFOIL_POLY)

    def test_join_vertical_pair_is_pretzel(self):
        """Test joining two vertical ribbons then closing gives the two-pretzel"""
        joined = join_ew(ribbon_tangle(2, Direction.VERTICAL), ribbon_tangle(3, Direction.VERTICAL))
        self.assertEqual(
            char_poly(diagram_to_matrix(numerator_closure(joined))),
            char_poly(diagram_to_matrix(build_pretzel([2, 3]))),
        )

    def test_pair_plus_t_tangle(self):
        """Test a vertical pair joined to a T tangle at all ones has Conway 5"""
        pair = join_ew(ribbon_tangle(1, Direction.VERTICAL), ribbon_tangle(1, Direction.VERTICAL))
        diagram = numerator_closure(join_ew(pair, (H(1) * V(2)).tangle([1, 1])))
        self.assertEqual(conway(diagram), 5)

    def test_expression_fraction_matches_diagram(self):
        """Test tangle fractions predict the Conway number of the closure"""
        expr = (V(1) + V(2)) + H(3) * V(4)
        for a in ([1, 1, 1, 1], [2, 1, 3, 1], [1, 2, 2, 3]):
            numerator, _ = expr.fraction(a)
            self.assertEqual(conway(expr.closure(a)), numerator)

    def test_closure_of_arcs(self):
        """Test closing a tangle without crossings is refused"""
        with self.assertRaises(ClosureDisconnected):
            numerator_closure(infinity_tangle())


class CompositionTestCase(SimpleTestCase):
    def setUp(self):
        self.trefoil = build_cyclic_torus(3)

    def test_disjoint_union(self):
        """Test separated trefoils multiply polynomials and have Conway 0"""
        union = disjoint_union(self.trefoil, self.trefoil)
        self.assertEqual(char_poly(diagram_to_matrix(union)), TREFOIL_POLY * TREFOIL_POLY)
        self.assertEqual(conway(union), 0)

    def test_granny(self):
        """Test composing two trefoils gives Conway 9"""
        granny = compose_knots(self.trefoil, self.trefoil)
        poly = char_poly(diagram_to_matrix(granny))
        self.assertEqual(poly.derivative()(2), 54)
        self.assertEqual(conway(granny), 9)

    def test_compose_with_unknot(self):
        """Test composing with a crossing-free diagram returns the other"""
        self.assertEqual(compose_knots(self.trefoil, UNKNOT), self.trefoil)
        self.assertEqual(compose_knots(UNKNOT, self.trefoil), self.trefoil)
        with self.assertRaises(EmptyDiagram):
            compose_knots(UNKNOT, UNKNOT)
        with self.assertRaises(EmptyDiagram):
            twist_composition(UNKNOT, self.trefoil)

    def test_twist_composition_keeps_conway(self):
        """Test an extra twist does not change the Conway number"""
        self.assertEqual(conway(twist_composition(self.trefoil, self.trefoil)), 9)

    def test_link_composition_is_two_components(self):
        """Test the clasp links the two knots"""
        code = assign_alternation(link_composition(self.trefoil, build_twist_chain(1)))
        self.assertEqual(len(code.components), 2)

    def test_quartet_sizes(self):
        """Test quartet crossing counts"""
        four = quartet(self.trefoil, build_twist_chain(2))
        self.assertEqual(
            {name: d.crossing_count for name, d in four.items()},
            {'factor': 5, 'composition': 5, 'twist': 6, 'link': 7},
        )


class AlternationTestCase(SimpleTestCase):
    def test_single_kink(self):
        """Test the one-crossing twist reads O1 U1"""
        self.assertEqual(str(assign_alternation(build_twist_chain(1))), "O1 U1")

    def test_torus_trefoil(self):
        """Test the torus trefoil alternates as the trefoil code does"""
        code = assign_alternation(build_cyclic_torus(3))
        self.assertEqual(len(code.components), 1)
        self.assertEqual(char_poly(to_matrix(code)), char_poly(to_matrix(parse_gauss_code(TREFOIL_CODE))))

    def test_first_visit_is_over(self):
        """Test the canonical mirror choice"""
        code = assign_alternation(build_pretzel([2, 2, 2]))
        self.assertEqual(code.components[0][0].passing, 'O')

    def test_odd_gap_conflict(self):
        """Test a map whose strand meets a crossing again after two steps"""
        with self.assertRaises(AlternationConflict):
            assign_alternation(Diagram(((4, 2, 1, 3), (1, 3, 2, 4))))

    def test_pd_text(self):
        """Test the planar diagram export of the single kink"""
        self.assertEqual(to_pd(build_twist_chain(1)), "PD[X[1,1,2,2]]")


class FamilySpecTestCase(SimpleTestCase):
    def test_leaf_specs(self):
        """Test leaf specs and their crossing counts"""
        self.assertEqual(parse_family_spec("torus:5").crossing_count(), 5)
        self.assertEqual(parse_family_spec("rational: 4, 3").crossing_count(), 7)
        self.assertEqual(parse_family_spec("unknot").build(), UNKNOT)

    def test_nested_specs(self):
        """Test combinators nest and build"""
        spec = parse_family_spec("compose(torus:3, twistsum(twist:1, torus:3))")
        self.assertEqual(spec.crossing_count(), 8)
        self.assertEqual(str(spec), "compose(torus:3,twistsum(twist:1,torus:3))")
        self.assertEqual(conway(build_from_spec("compose(torus:3,torus:3)")), 9)
        self.assertEqual(build_from_spec("clasp(twist:1,twist:1)").crossing_count, 4)

    def test_syntax_errors(self):
        """Test malformed specs name the offending token"""
        with self.assertRaises(SpecSyntaxError) as ctx:
            parse_family_spec("knot:3")
        self.assertEqual(ctx.exception.token, "knot:3")
        for text in ("torus:", "twist:3,4", "compose(torus:3)", "pretzel:1,"):
            with self.assertRaises(SpecSyntaxError):
                parse_family_spec(text)

    def test_invalid_ribbons(self):
        """Test zero counts and single-ribbon pretzels"""
        with self.assertRaises(InvalidRibbon):
            parse_family_spec("torus:0")
        with self.assertRaises(InvalidRibbon):
            parse_family_spec("pretzel:3")
