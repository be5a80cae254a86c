"""
Closed-form characteristic polynomials of the ribbon families.

Every formula is assembled from ``chebyshev_j``; nothing is hand-expanded.
"""

import logging
from dataclasses import dataclass
from enum import Enum

from diagrams import builders
from polyalg.chebyshev import chebyshev_j
from polyalg.polynomial import X, X_MINUS_2
from .exceptions import UnknownFamily, FamilyArityMismatch

logger = logging.getLogger(__name__)

J = chebyshev_j


class FamilyName(Enum):
    TWIST_CIRCLE = 'TwistCircle'
    CYCLIC_TORUS = 'CyclicTorus'
    TWO_RIBBON = 'TwoRibbon'
    THREE_RIBBON_MIXED = 'ThreeRibbonMixed'
    THREE_RIBBON_PARALLEL = 'ThreeRibbonParallel'
    COMPOSITION_TWO = 'CompositionTwo'
    COMPOSITION_THREE = 'CompositionThree'

    @classmethod
    def lookup(cls, text):
        for member in cls:
            if text.replace('_', '').lower() in (member.value.lower(), member.name.replace('_', '').lower()):
                return member
        raise UnknownFamily(f"unknown family {text!r}; expected one of {[m.value for m in cls]}")

    @property
    def arity(self):
        return ARITY[self]


ARITY = {
    FamilyName.TWIST_CIRCLE: 1,
    FamilyName.CYCLIC_TORUS: 1,
    FamilyName.TWO_RIBBON: 2,
    FamilyName.COMPOSITION_TWO: 2,
    FamilyName.THREE_RIBBON_MIXED: 3,
    FamilyName.THREE_RIBBON_PARALLEL: 3,
    FamilyName.COMPOSITION_THREE: 3,
}


@dataclass(frozen=True)
class FamilyId:
    name: FamilyName
    params: tuple

    def __post_init__(self):
        name = self.name if isinstance(self.name, FamilyName) else FamilyName.lookup(self.name)
        object.__setattr__(self, 'name', name)
        object.__setattr__(self, 'params', tuple(self.params))
        if len(self.params) != name.arity:
            raise FamilyArityMismatch(
                f"{name.value} takes {name.arity} parameters, got {len(self.params)}"
            )
        for value in self.params:
            if not isinstance(value, int) or value < 1:
                raise FamilyArityMismatch(f"{name.value} parameters must be positive integers, got {value!r}")

    def __str__(self):
        return f"{self.name.value}(" + ",".join(str(v) for v in self.params) + ")"


# Closed forms

def twist_circle(v):
    return X_MINUS_2 * J(v - 1)


def cyclic_torus(v):
    return 2 * (J(v) - 1) - X * J(v - 1)


def two_ribbon(j, k):
    return (
        X_MINUS_2 * (J(j - 1) + J(k - 1))
        + X * (J(j - 1) * (J(k) - 1) + (J(j) - 1) * J(k - 1))
        - X ** 2 * J(j - 1) * J(k - 1)
    )


def three_ribbon_mixed(k, l, m):
    """
    Two parallel ribbons k, l and one orthogonal ribbon m; symmetric in k, l.

    The product [x J_{k-1} - J_k][x J_{l-1} - J_l] appears on both lines.
    """
    bracket = (X * J(k - 1) - J(k)) * (X * J(l - 1) - J(l))
    return (
        (J(k) * J(l) + bracket - 2) * J(m)
        - X * (bracket + J(k - 1) + J(l - 1) - 1) * J(m - 1)
        - 2 * J(k - 1) * J(l - 1)
    )


def three_ribbon_parallel(k, l, m):
    """Three parallel ribbons; symmetric in all three indexes."""
    return (
        X * (J(k - 1) * J(l) * J(m) + J(k) * J(l - 1) * J(m) + J(k) * J(l) * J(m - 1))
        - X ** 2 * (J(k) * J(l - 1) * J(m - 1) + J(k - 1) * J(l) * J(m - 1) + J(k - 1) * J(l - 1) * J(m))
        + (X ** 3 - 2) * J(k - 1) * J(l - 1) * J(m - 1)
        - X * (J(k - 1) + J(l - 1) + J(m - 1))
    )


def _cross_term(k, l):
    return (J(k) - 1) * J(l - 1) + J(k - 1) * (J(l) - 1)


def composition_two(k, l):
    return X * _cross_term(k, l) - X ** 2 * J(k - 1) * J(l - 1)


def composition_three(k, l, m):
    """Torus members k and l composed at two edges of the middle member m."""
    middle = J(m) - X * J(m - 1)
    return (
        (J(k) - 1) * (J(l) - 1) * (2 * J(m) - X * J(m - 1) + 2)
        + X ** 2 * J(k - 1) * J(l - 1) * middle
        - X * _cross_term(k, l) * (middle + 1)
    )


CLOSED_FORMS = {
    FamilyName.TWIST_CIRCLE: twist_circle,
    FamilyName.CYCLIC_TORUS: cyclic_torus,
    FamilyName.TWO_RIBBON: two_ribbon,
    FamilyName.THREE_RIBBON_MIXED: three_ribbon_mixed,
    FamilyName.THREE_RIBBON_PARALLEL: three_ribbon_parallel,
    FamilyName.COMPOSITION_TWO: composition_two,
    FamilyName.COMPOSITION_THREE: composition_three,
}


def family_poly(family):
    """
    The closed-form polynomial of a family member.

    Args:
        family: FamilyId

    Returns:
        IntPolynomial
    """
    logger.debug(f"Closed form for {family}")
    return CLOSED_FORMS[family.name](*family.params)


def torus_factored_form(v):
    """(x-2)[J_k + J_{k-1}]^2 for v = 2k+1, (x^2-4) J_{k-1}^2 for v = 2k."""
    if v < 1:
        raise FamilyArityMismatch(f"torus members start at one crossing, got {v}")
    k, odd = divmod(v, 2)
    if odd:
        return X_MINUS_2 * (J(k) + J(k - 1)) ** 2
    return (X ** 2 - 4) * J(k - 1) ** 2


# Diagram realizations

def _rational_mixed(k, l, m):
    return builders.build_rational([k, m, l])


def _torus_composition(k, l):
    return builders.compose_knots(builders.build_cyclic_torus(k), builders.build_cyclic_torus(l))


def _chain_three(k, l, m):
    return builders.build_composition_chain([k, m, l])


REALIZATIONS = {
    FamilyName.TWIST_CIRCLE: builders.build_twist_chain,
    FamilyName.CYCLIC_TORUS: builders.build_cyclic_torus,
    FamilyName.TWO_RIBBON: lambda j, k: builders.build_rational([j, k]),
    FamilyName.THREE_RIBBON_MIXED: _rational_mixed,
    FamilyName.THREE_RIBBON_PARALLEL: lambda k, l, m: builders.build_pretzel([k, l, m]),
    FamilyName.COMPOSITION_TWO: _torus_composition,
    FamilyName.COMPOSITION_THREE: _chain_three,
}


def family_diagram(family):
    """The diagram whose matrix the closed form describes."""
    return REALIZATIONS[family.name](*family.params)


def crossing_count(family):
    return sum(family.params)
