"""
Diagram builders for the ribbon families and the four two-knot compositions.

Crossings are numbered in construction order.
"""

import logging

from .exceptions import EmptyDiagram, InvalidRibbon
from .expressions import H, V, Add, Stack
from .tangles import (
    Direction, ribbon_tangle, join_ew, join_ns, numerator_closure,
    infinity_tangle, disjoint_union, splice,
)

logger = logging.getLogger(__name__)


def _check_ribbons(a, minimum_length=1):
    a = list(a)
    if len(a) < minimum_length:
        raise InvalidRibbon(f"need at least {minimum_length} ribbons, got {len(a)}")
    for value in a:
        if not isinstance(value, int) or value < 1:
            raise InvalidRibbon(f"ribbon crossing counts must be positive integers, got {value!r}")
    return a


def build_twist_chain(v):
    """The twisted circle with ``v`` crossings."""
    (v,) = _check_ribbons([v])
    return numerator_closure(ribbon_tangle(v, Direction.VERTICAL))


def build_cyclic_torus(v):
    """The closed chain of ``v`` crossings: figure-eight twist, Hopf, trefoil, Solomon, ..."""
    (v,) = _check_ribbons([v])
    return numerator_closure(ribbon_tangle(v, Direction.HORIZONTAL))


def pretzel_expression(n):
    return Add(tuple(V(i) for i in range(1, n + 1)))


def build_pretzel(a):
    """Vertical ribbons placed side by side, then closed."""
    a = _check_ribbons(a, minimum_length=2)
    return pretzel_expression(len(a)).closure(a)


def rational_expression(n):
    """
    Alternate horizontal and vertical ribbons from the innermost a_N outwards.

    Odd positions are added on the east, even positions stacked below, so the
    fraction is the continued fraction a_1 + 1/(a_2 + 1/(a_3 + ...)).
    """
    expr = H(n) if n % 2 else V(n)
    for i in range(n - 1, 0, -1):
        if i % 2:
            expr = Add((H(i), expr))
        else:
            expr = Stack((V(i), expr))
    return expr


def build_rational(a):
    a = _check_ribbons(a)
    return rational_expression(len(a)).closure(a)


def composition_chain_expression(n):
    return Stack(tuple(H(i) for i in range(1, n + 1)))


def build_composition_chain(a):
    """Horizontal ribbons stacked north to south and closed; inner members meet two others."""
    a = _check_ribbons(a)
    return composition_chain_expression(len(a)).closure(a)


# Two-knot compositions

def compose_knots(first, second):
    """Break one edge of each and reconnect them into one knot."""
    if not first.crossings and not second.crossings:
        raise EmptyDiagram("cannot compose two diagrams without crossings")
    if not first.crossings:
        return second
    if not second.crossings:
        return first
    return splice(first, second, infinity_tangle())


def twist_composition(first, second):
    """The composition with one extra crossing twisting the two joining edges."""
    return splice(first, second, ribbon_tangle(1, Direction.HORIZONTAL))


def link_composition(first, second):
    """The two joining edges clasp each other, closing a two-edge face."""
    return splice(first, second, ribbon_tangle(2, Direction.HORIZONTAL))


def quartet(first, second):
    """
    The factor, composition, twist and link diagrams of a pair.

    Returns:
        dict keyed by 'factor', 'composition', 'twist', 'link'
    """
    return {
        'factor': disjoint_union(first, second),
        'composition': compose_knots(first, second),
        'twist': twist_composition(first, second),
        'link': link_composition(first, second),
    }


__all__ = [
    'build_twist_chain', 'build_cyclic_torus', 'build_pretzel', 'build_rational',
    'build_composition_chain', 'compose_knots', 'twist_composition',
    'link_composition', 'disjoint_union', 'quartet', 'join_ew', 'join_ns',
]
