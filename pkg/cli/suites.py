"""
Acceptance sweeps run by ``manage.py verify``.

Every check is a module-level function returning a list of mismatch
descriptions, so a sweep can be fanned out over worker processes.
"""

import itertools
import logging
from concurrent.futures import ProcessPoolExecutor

from conway.catalog import catalog, rational_entry, representative_diagram
from conway.functions import gauss_bracket_function, gauss_bracket_numerator
from conway.invariants import conway_from_diagram
from diagrams.builders import (
    build_twist_chain, build_cyclic_torus, build_rational, build_pretzel,
    build_composition_chain, compose_knots, quartet,
)
from diagrams.tangles import UNKNOT, disjoint_union
from diagrams.utils import diagram_to_matrix
from families.closed_forms import FamilyId, FamilyName, family_poly, torus_factored_form, family_diagram
from families.recurrences import check_recurrence, link_relation_check
from knot_algebra.exceptions import KnotAlgebraError
from knotgraph.matrix import (
    validate, components, permutation_decompositions, brute_force_decompositions,
    char_poly, conway_number_from_poly,
)
from polyalg.chebyshev import chebyshev_j, j_limits_at_two, check_matrix_power_identity
from polyalg.polynomial import X_MINUS_2, IntPolynomial

logger = logging.getLogger(__name__)

ORACLE_RANGE = range(1, 13)
CLOSED_FORM_BOUNDS = {
    FamilyName.TWO_RIBBON: 4,
    FamilyName.THREE_RIBBON_MIXED: 3,
    FamilyName.THREE_RIBBON_PARALLEL: 3,
    FamilyName.COMPOSITION_TWO: 4,
    FamilyName.COMPOSITION_THREE: 3,
}


def _poly(diagram):
    return char_poly(diagram_to_matrix(diagram))


def _quartet_pool():
    return [build_twist_chain(1), build_twist_chain(2), build_cyclic_torus(2), build_cyclic_torus(3)]


# Oracles

def check_torus_oracle():
    mismatches = []
    for v in ORACLE_RANGE:
        diagram_poly = _poly(build_cyclic_torus(v))
        closed = family_poly(FamilyId(FamilyName.CYCLIC_TORUS, (v,)))
        if diagram_poly != closed:
            mismatches.append(f"torus {v}: diagram {diagram_poly} != closed form {closed}")
        if closed != torus_factored_form(v):
            mismatches.append(f"torus {v}: closed form {closed} != factored {torus_factored_form(v)}")
    return mismatches


def check_twist_oracle():
    mismatches = []
    for v in ORACLE_RANGE:
        diagram_poly = _poly(build_twist_chain(v))
        expected = X_MINUS_2 * chebyshev_j(v - 1)
        if diagram_poly != expected:
            mismatches.append(f"twist {v}: diagram {diagram_poly} != {expected}")
    return mismatches


def check_closed_forms():
    mismatches = []
    for name, bound in CLOSED_FORM_BOUNDS.items():
        for params in itertools.product(range(1, bound + 1), repeat=name.arity):
            family = FamilyId(name, params)
            closed = family_poly(family)
            built = _poly(family_diagram(family))
            if closed != built:
                mismatches.append(f"{family}: closed form {closed} != diagram {built}")
    return mismatches


def check_rational_brackets():
    mismatches = []
    vectors = [(4, 3), (2, 1, 1)]
    for n in range(1, 5):
        vectors.extend(itertools.product(range(1, 4), repeat=n))
    for a in vectors:
        built = conway_from_diagram(build_rational(a))
        expected = gauss_bracket_numerator(a)
        if built != expected:
            mismatches.append(f"rational {a}: Conway number {built} != bracket {expected}")
    return mismatches


# Recurrences

def check_chebyshev():
    mismatches = []
    for k in range(51):
        value, slope = j_limits_at_two(k)
        if (value, slope) != (k + 1, k * (k + 1) * (k + 2) // 6):
            mismatches.append(f"J_{k}(2), J_{k}'(2) = {value}, {slope}")
    for k in range(21):
        if not check_matrix_power_identity(k):
            mismatches.append(f"matrix power identity fails at k={k}")
    return mismatches


def check_family_recurrences():
    mismatches = []
    twists = [family_poly(FamilyId(FamilyName.TWIST_CIRCLE, (v,))) for v in (1, 2, 3)]
    if not check_recurrence(*twists).homogeneous:
        mismatches.append("twist family is not homogeneous")
    for start in range(1, 11):
        triple = [family_poly(FamilyId(FamilyName.CYCLIC_TORUS, (v,))) for v in (start, start + 1, start + 2)]
        source = check_recurrence(*triple)
        if source.H != IntPolynomial.constant(2):
            mismatches.append(f"torus from {start}: source {source.H} != 2")
    for j in range(1, 4):
        for start in range(1, 5):
            triple = [family_poly(FamilyId(FamilyName.TWO_RIBBON, (j, k))) for k in (start, start + 1, start + 2)]
            source = check_recurrence(*triple)
            if source.H != 2 * chebyshev_j(j - 1):
                mismatches.append(f"two-ribbon j={j} from {start}: source {source.H}")
    return mismatches


def check_link_relation():
    mismatches = []
    pool = _quartet_pool()
    for i, j in itertools.product(range(len(pool)), repeat=2):
        polys = {name: _poly(d) for name, d in quartet(pool[i], pool[j]).items()}
        if not link_relation_check(polys['factor'], polys['composition'], polys['twist'], polys['link']):
            mismatches.append(f"quartet ({i}, {j}): link {polys['link']} breaks the relation")
    return mismatches


# Matrices and Conway numbers

def _suite_diagrams():
    diagrams = [build_twist_chain(v) for v in range(1, 11)]
    diagrams += [build_cyclic_torus(v) for v in range(1, 11)]
    diagrams += [build_rational(a) for n in (2, 3) for a in itertools.product(range(1, 4), repeat=n)]
    diagrams += [build_pretzel(a) for a in itertools.product(range(1, 3), repeat=3)]
    diagrams += [build_composition_chain(a) for a in itertools.product(range(1, 3), repeat=3)]
    pool = _quartet_pool()
    for first, second in itertools.product(pool, repeat=2):
        diagrams += [d for d in quartet(first, second).values() if d.crossings]
    return diagrams


def check_structure():
    mismatches = []
    for index, diagram in enumerate(_suite_diagrams()):
        matrix = diagram_to_matrix(diagram)
        report = validate(matrix)
        if not report:
            mismatches.append(f"diagram {index}: {'; '.join(report.problems)}")
            continue
        if matrix.ones_product() != (2,) * matrix.size:
            mismatches.append(f"diagram {index}: M·1 != 2·1")
        poly = char_poly(matrix)
        if poly(2) != 0:
            mismatches.append(f"diagram {index}: P(2) = {poly(2)}")
            continue
        try:
            conway_number_from_poly(poly, matrix.size)
        except KnotAlgebraError as e:
            mismatches.append(f"diagram {index}: {e}")
    return mismatches


def check_decompositions():
    mismatches = []
    for index, diagram in enumerate(_suite_diagrams()):
        matrix = diagram_to_matrix(diagram)
        found = permutation_decompositions(matrix)
        if len(components(matrix)) == 1 and len(found) != 1:
            mismatches.append(f"diagram {index}: single component with {len(found)} decompositions")
        if matrix.size <= 6 and found != brute_force_decompositions(matrix):
            mismatches.append(f"diagram {index}: component search disagrees with brute force")
    return mismatches


def check_conway_properties():
    mismatches = []
    for v in range(1, 11):
        if conway_from_diagram(build_twist_chain(v)) != 1:
            mismatches.append(f"twist {v} is not Conway 1")
    if conway_from_diagram(UNKNOT) != 1:
        mismatches.append("unknot is not Conway 1")
    factors = [build_twist_chain(2), build_cyclic_torus(3), build_cyclic_torus(5), build_rational([2, 2])]
    for first, second in itertools.product(factors, repeat=2):
        if len(first.crossings) + len(second.crossings) > 10:
            continue
        product = conway_from_diagram(first) * conway_from_diagram(second)
        composed = conway_from_diagram(compose_knots(first, second))
        if composed != product:
            mismatches.append(f"composition gives {composed}, factors multiply to {product}")
        union = conway_from_diagram(disjoint_union(first, second))
        if union != 0:
            mismatches.append(f"disjoint union gives {union}")
    granny = conway_from_diagram(compose_knots(build_cyclic_torus(3), build_cyclic_torus(3)))
    if granny != 9:
        mismatches.append(f"granny knot gives {granny}")
    return mismatches


# Catalog

def check_catalog():
    mismatches = []
    counts = [len(catalog(n)) for n in range(1, 6)]
    if counts != [1, 1, 2, 5, 12]:
        mismatches.append(f"catalog counts {counts}")
    for n in range(1, 6):
        if rational_entry(n).function != gauss_bracket_function(n):
            mismatches.append(f"N={n}: rational entry is not the Gauss bracket")
        for entry in catalog(n):
            if entry.function.term_parity() == 'mixed':
                mismatches.append(f"{entry.formula}: mixed parity")
            if entry.function.all_ones() != entry.term_count():
                mismatches.append(f"{entry.formula}: all-ones value differs from term count")
    return mismatches


def check_representatives():
    mismatches = []
    for n in range(1, 6):
        for entry in catalog(n):
            value = conway_from_diagram(representative_diagram(entry))
            if value != entry.term_count():
                mismatches.append(f"{entry.formula}: representative Conway {value} != {entry.term_count()}")
    return mismatches


SUITES = {
    'oracle': (
        check_torus_oracle, check_twist_oracle, check_closed_forms, check_rational_brackets,
        check_structure, check_decompositions,
    ),
    'recurrences': (check_chebyshev, check_family_recurrences),
    'eq13': (check_link_relation,),
    'conway': (check_conway_properties,),
    'catalog': (check_catalog, check_representatives),
}
SUITES['all'] = tuple(itertools.chain.from_iterable(SUITES.values()))


def _run_check(check):
    try:
        return check()
    except KnotAlgebraError as e:
        return [f"raised {type(e).__name__}: {e}"]


def run_suite(name, workers=1):
    """
    Run every check of a suite.

    Returns:
        dict mapping check name to its list of mismatches
    """
    checks = SUITES[name]
    logger.debug(f"Running suite {name} with {len(checks)} checks on {workers} worker(s)")
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(_run_check, checks))
    else:
        outcomes = [_run_check(check) for check in checks]

    results = {}
    for check, mismatches in zip(checks, outcomes):
        if mismatches:
            logger.warning(f"{check.__name__}: {len(mismatches)} mismatch(es)")
        results[check.__name__] = mismatches
    return results
