import logging

from diagrams.exceptions import EmptyDiagram
from diagrams.utils import diagram_to_matrix
from knotgraph.matrix import char_poly, conway_number_from_poly

logger = logging.getLogger(__name__)


def conway_from_matrix(matrix, loops=0):
    """
    The Conway number of a diagram given by its matrix and free-circle count.

    One free circle alone is the unknot (1); any further separated piece
    makes it 0.
    """
    crossings = matrix.size
    if crossings == 0:
        if loops == 0:
            raise EmptyDiagram("a diagram needs a crossing or a circle")
        return 1 if loops == 1 else 0
    if loops:
        return 0
    return conway_number_from_poly(char_poly(matrix), crossings)


def conway_from_diagram(diagram):
    """toMatrix, charPoly and P'(2)/V in one step."""
    return conway_from_matrix(diagram_to_matrix(diagram), diagram.loops)


def conway_from_resolved(resolved):
    return conway_from_matrix(resolved.matrix, resolved.loops)
