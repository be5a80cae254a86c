"""
Families of alternating knots with up to five ribbons.

Each entry keeps the Conway function as printed, the representative knot
obtained with every a_j = 1, whether the family is the rational one, and the
tangle expression whose numerator closure realizes the family.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache

from diagrams.builders import pretzel_expression, rational_expression
from diagrams.expressions import H, V
from .exceptions import OutOfRange, NoRealization
from .functions import ConwayFunction

logger = logging.getLogger(__name__)

MAX_RIBBONS = 5


@dataclass(frozen=True)
class CatalogEntry:
    ribbons: int
    function: ConwayFunction
    representative: str
    rational: bool = False
    realization: object = None
    formula: str = ''

    def term_count(self):
        return self.function.term_count()

    def to_json(self):
        return {
            'ribbons': self.ribbons,
            'terms': self.function.to_json(),
            'representative': self.representative,
            'rational': self.rational,
        }


# (formula, representative, rational, realization)
_DATA = {
    1: [
        ("a1", "single twist", True, rational_expression(1)),
    ],
    2: [
        ("1 + a1*a2", "Hopf link", True, rational_expression(2)),
    ],
    3: [
        ("a1*a2 + a2*a3 + a3*a1", "trefoil 3_1", False, pretzel_expression(3)),
        ("a1*a2*a3 + a1 + a3", "trefoil 3_1", True, rational_expression(3)),
    ],
    4: [
        ("a1*a2*a3 + a2*a3*a4 + a3*a4*a1 + a4*a1*a2", "Solomon 4_1^2", False,
         pretzel_expression(4)),
        ("a1*a2*a3*a4 + a1*a2 + a2*a3 + a3*a1", "Solomon 4_1^2", False,
         V(1) + V(2) + V(3) + H(4)),
        ("a1*a2*a3*a4 + (a1 + a2)*(a3 + a4)", "figure-eight 4_1", False,
         (V(1) + V(2)) + H(3) * H(4)),
        ("a1*a2*a3 + (a1 + a2)*(a3*a4 + 1)", "figure-eight 4_1", False,
         (V(1) + V(2)) + H(3) * V(4)),
        ("a1*a2*a3*a4 + a1*a2 + a3*a4 + a1*a4 + 1", "figure-eight 4_1", True,
         rational_expression(4)),
    ],
    5: [
        ("a1*a2*a3*a4 + a2*a3*a4*a5 + a3*a4*a5*a1 + a4*a5*a1*a2 + a5*a1*a2*a3",
         "cinquefoil 5_1", False, pretzel_expression(5)),
        ("a1*a2*a3 + a2*a3*a4 + a3*a4*a1 + a4*a1*a2 + a1*a2*a3*a4*a5",
         "cinquefoil 5_1", False, pretzel_expression(4) + H(5)),
        ("(a1 + a2)*(a3*a4 + a4*a5 + a5*a3) + a1*a2*a3*a4*a5",
         "three-twist 5_2", False, (V(1) + V(2)) + H(3) * H(4) * H(5)),
        ("(a1*a2 + 1)*(a3*a4 + a4*a5 + a5*a3) + a2*a3*a4*a5",
         "three-twist 5_2", False, (H(1) + V(2)) + H(3) * H(4) * H(5)),
        ("(a1 + a3 + a1*a2*a3)*(a4 + a5) + a1*a3*a4*a5",
         "three-twist 5_2", False, H(1) * V(2) * H(3) + V(4) + V(5)),
        ("(a1 + a3 + a1*a2*a3)*(1 + a4*a5) + a1*a3*a5",
         "three-twist 5_2", False, H(1) * V(2) * H(3) + (H(4) + V(5))),
        ("1 + a1*(a2 + a3) + (a3 + a4)*a5 + a1*(a2*a3 + a3*a4 + a4*a2)*a5",
         "Whitehead link 5_1^2", False, (H(2) + V(1)) + H(3) * (H(4) + V(5))),
        ("(a1 + a2)*(a4 + a5) + a1*a2*a3*(a4 + a5) + (a1 + a2)*a3*a4*a5",
         "Whitehead link 5_1^2", False, (V(1) + V(2)) * H(3) + V(4) + V(5)),
        ("(a1 + a2)*a3*(a4 + a5) + a1*a2*(a4 + a5) + (a1 + a2)*a4*a5",
         "Whitehead link 5_1^2", False, (V(1) + V(2)) * V(3) + V(4) + V(5)),
        ("a1 + a5 + a1*(a2 + a4)*a5 + (a1*a2 + 1)*a3*(a4*a5 + 1)",
         "Whitehead link 5_1^2", True, rational_expression(5)),
        ("(a1 + a2)*(a3*a4*a5 + a3 + a5) + a1*a2*(1 + a4*a5)",
         "Whitehead link 5_1^2", False, (V(1) + V(2)) + V(3) * (H(4) + V(5))),
        # Printed with (a1 + a2)*a4*a5 as the last product, which doubles a1*a4*a5
        # and a2*a4*a5; a3 belongs in that product.
        ("(a1*a2*a3 + a1 + a2)*(1 + a4*a5) + (a1 + a2)*a3*a5",
         "Whitehead link 5_1^2", False, (V(1) + V(2)) * H(3) + (H(4) + V(5))),
    ],
}

PRINTED_FORMULAS = {
    (5, 12): "(a1*a2*a3 + a1 + a2)*(1 + a4*a5) + (a1 + a2)*a4*a5",
}


@lru_cache(maxsize=None)
def catalog(n):
    """
    The families of ``n`` ribbons.

    Raises:
        OutOfRange: n outside 1..5
    """
    if n not in _DATA:
        raise OutOfRange(f"catalog data exists for 1..{MAX_RIBBONS} ribbons, got {n}")
    return tuple(
        CatalogEntry(
            ribbons=n,
            function=ConwayFunction.from_text(formula, n),
            representative=representative,
            rational=rational,
            realization=realization,
            formula=formula,
        )
        for formula, representative, rational, realization in _DATA[n]
    )


def catalog_json(n):
    return [entry.to_json() for entry in catalog(n)]


def rational_entry(n):
    (entry,) = [entry for entry in catalog(n) if entry.rational]
    return entry


def realize(entry, a):
    """The numerator closure of the entry's tangle expression at ``a``."""
    if entry.realization is None:
        raise NoRealization(f"no tangle construction pinned for {entry.formula}")
    return entry.realization.closure(list(a))


def representative_diagram(entry):
    """The family member with every ribbon of one crossing."""
    return realize(entry, [1] * entry.ribbons)
