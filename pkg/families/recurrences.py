import logging
from dataclasses import dataclass

from polyalg.exceptions import NonZeroRemainder
from polyalg.polynomial import X, X_MINUS_2

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FamilySource:
    """The source H of P_{V+2} - x P_{V+1} + P_V = (x-2) H."""

    H: object
    homogeneous: bool = False

    def to_json(self):
        return {'homogeneous': self.homogeneous, 'source': str(self.H)}


def check_recurrence(p0, p1, p2):
    """
    Find the source term of three consecutive family members.

    Returns:
        FamilySource with ``homogeneous`` set when the twist recurrence holds
        outright, otherwise carrying H

    Raises:
        NonZeroRemainder: the residual has no factor x-2
    """
    residual = p2 - X * p1 + p0
    if residual.is_zero():
        return FamilySource(residual, homogeneous=True)

    try:
        source = residual.div_exact(X_MINUS_2)
    except NonZeroRemainder:
        logger.warning(f"Recurrence residual {residual} has no factor x-2")
        raise
    return FamilySource(source)


def link_relation(factor, composition, twist):
    """The link polynomial predicted from the other three."""
    return (X + 2) * twist - (X + 1) * factor - X * composition


def link_relation_check(factor, composition, twist, link):
    """True iff link = (x+2) twist - (x+1) factor - x composition exactly."""
    return link == link_relation(factor, composition, twist)
