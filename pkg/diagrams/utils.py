import logging
from dataclasses import dataclass

from knotgraph.matrix import KnotMatrix

from .exceptions import TooManyCrossings
from .gauss import GaussCode, parse_gauss_code, to_matrix
from .specs import parse_family_spec
from .tangles import Diagram, assign_alternation, to_pd

logger = logging.getLogger(__name__)


def diagram_to_matrix(diagram):
    """Alternation assignment followed by the over-to-under edge rule."""
    if not diagram.crossings:
        return KnotMatrix()
    return to_matrix(assign_alternation(diagram))


@dataclass(frozen=True)
class ResolvedInput:
    """A Gauss code or family spec reduced to its code and matrix."""

    code: GaussCode
    matrix: KnotMatrix
    loops: int = 0
    diagram: Diagram = None

    @property
    def crossings(self):
        return self.matrix.size

    def pd(self):
        """PD text of a built family diagram; empty for Gauss-code input and bare circles."""
        if self.diagram is None or not self.diagram.crossings:
            return ''
        return to_pd(self.diagram)


def resolve_input(gauss=None, spec=None, max_crossings=None):
    """
    Turn exactly one of ``gauss`` / ``spec`` into a ResolvedInput.

    Raises:
        TooManyCrossings: when ``max_crossings`` is given and exceeded
        KnotAlgebraError subclasses from parsing and building
    """
    if (gauss is None) == (spec is None):
        raise ValueError("exactly one of gauss or spec is required")

    if gauss is not None:
        code = parse_gauss_code(gauss)
        if max_crossings is not None and code.crossing_count > max_crossings:
            raise TooManyCrossings(code.crossing_count, max_crossings)
        return ResolvedInput(code, to_matrix(code))

    tree = parse_family_spec(spec)
    if max_crossings is not None and tree.crossing_count() > max_crossings:
        raise TooManyCrossings(tree.crossing_count(), max_crossings)
    diagram = tree.build()
    logger.debug(f"Built {tree} with {diagram.crossing_count} crossings")
    if not diagram.crossings:
        return ResolvedInput(GaussCode(), KnotMatrix(), diagram.loops, diagram)
    code = assign_alternation(diagram)
    return ResolvedInput(code, to_matrix(code), diagram.loops, diagram)
