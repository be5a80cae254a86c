"""
The directed adjacency matrix of an alternating diagram.

Entry M[j][k] counts the edges running from crossing j to crossing k. Every
crossing has two outgoing and two incoming edges, so rows and columns sum to 2
and an entry of 2 stands for a pair of parallel edges.
"""

import itertools
import logging
from collections import namedtuple
from dataclasses import dataclass, field

from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix

from polyalg.polynomial import IntPolynomial, ZERO, X_MINUS_2
from .exceptions import MalformedMatrix, DecompositionFailure, NotDivisible

logger = logging.getLogger(__name__)

Edge = namedtuple('Edge', ['row', 'col', 'copy'])


@dataclass(frozen=True)
class KnotMatrix:
    entries: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, 'entries', tuple(tuple(int(e) for e in row) for row in self.entries))

    @classmethod
    def from_json(cls, data):
        entries = data.get('entries', [])
        if 'v' in data and data['v'] != len(entries):
            raise MalformedMatrix([f"v={data['v']} but {len(entries)} rows supplied"])
        return cls(tuple(tuple(row) for row in entries))

    def to_json(self):
        return {'v': self.size, 'entries': [list(row) for row in self.entries]}

    @property
    def size(self):
        return len(self.entries)

    def ones_product(self):
        """M times the all-ones vector."""
        return tuple(sum(row) for row in self.entries)

    def block_diagonal(self, other):
        n, m = self.size, other.size
        rows = [row + (0,) * m for row in self.entries]
        rows += [(0,) * n + row for row in other.entries]
        return KnotMatrix(tuple(rows))

    def permuted(self, perm):
        """Relabel crossing i as perm[i], permuting rows and columns together."""
        n = self.size
        rows = [[0] * n for _ in range(n)]
        for j in range(n):
            for k in range(n):
                rows[perm[j]][perm[k]] = self.entries[j][k]
        return KnotMatrix(tuple(tuple(row) for row in rows))

    def __str__(self):
        return "\n".join(" ".join(str(e) for e in row) for row in self.entries)


@dataclass
class ValidationReport:
    problems: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.problems

    def __bool__(self):
        return self.ok


def validate(matrix):
    """
    Check the knot-matrix invariants.

    Returns:
        ValidationReport: truthy when valid, otherwise listing each violation
    """
    report = ValidationReport()
    n = matrix.size
    for j, row in enumerate(matrix.entries):
        if len(row) != n:
            report.problems.append(f"row {j} has {len(row)} entries, expected {n}")
            return report

    for j, row in enumerate(matrix.entries):
        for k, entry in enumerate(row):
            if entry not in (0, 1, 2):
                report.problems.append(f"entry ({j},{k}) = {entry} not in {{0,1,2}}")
        if sum(row) != 2:
            report.problems.append(f"row {j} sums to {sum(row)}")
    for k in range(n):
        total = sum(matrix.entries[j][k] for j in range(n))
        if total != 2:
            report.problems.append(f"column {k} sums to {total}")

    # Redundant with the row sums, kept as the eigenvector statement.
    if any(value != 2 for value in matrix.ones_product()):
        report.problems.append("M*1 != 2*1")
    return report


def _require_valid(matrix):
    report = validate(matrix)
    if not report:
        logger.error(f"Rejected matrix of size {matrix.size}: {report.problems}")
        raise MalformedMatrix(report.problems)


def edges(matrix):
    """All 2V directed edges, entry-2 cells split into copies 0 and 1."""
    return [
        Edge(j, k, copy)
        for j, row in enumerate(matrix.entries)
        for k, entry in enumerate(row)
        for copy in range(entry)
    ]


def components(matrix):
    """
    Split the edges into link components by the alternating row/column walk.

    From an edge the walk takes the other edge of its row, then the other edge
    of that edge's column, and so on until the start edge comes back.

    Returns:
        list of edge cycles, one per component
    """
    _require_valid(matrix)
    all_edges = edges(matrix)
    by_row, by_col = {}, {}
    for edge in all_edges:
        by_row.setdefault(edge.row, []).append(edge)
        by_col.setdefault(edge.col, []).append(edge)

    def partner(group, edge):
        first, second = group
        return second if edge == first else first

    seen = set()
    cycles = []
    for start in all_edges:
        if start in seen:
            continue
        cycle = [start]
        seen.add(start)
        current = start
        along_row = True
        while True:
            if along_row:
                current = partner(by_row[current.row], current)
            else:
                current = partner(by_col[current.col], current)
            along_row = not along_row
            if current == start:
                break
            cycle.append(current)
            seen.add(current)
        if len(cycle) % 2:
            raise DecompositionFailure(f"walk from {start} closed after {len(cycle)} edges")
        cycles.append(cycle)

    logger.debug(f"Matrix of size {matrix.size} has {len(cycles)} components")
    return cycles


@dataclass(frozen=True)
class PermutationDecomposition:
    """
    An unordered pair of permutations with P + Q = M.

    A permutation is stored as the tuple of column indices, one per row.
    """

    p: tuple
    q: tuple

    def matrices(self):
        return _perm_matrix(self.p), _perm_matrix(self.q)

    def to_json(self):
        p, q = self.matrices()
        return {'p': [list(row) for row in p], 'q': [list(row) for row in q]}


def _perm_matrix(perm):
    n = len(perm)
    return tuple(tuple(1 if perm[j] == k else 0 for k in range(n)) for j in range(n))


def _unordered(p, q):
    return PermutationDecomposition(*sorted((tuple(p), tuple(q))))


def permutation_decompositions(matrix):
    """
    Every unordered pair of permutation matrices summing to ``matrix``.

    Each component walk is two-coloured by position parity; components can
    be swapped independently.
    """
    cycles = components(matrix)
    n = matrix.size
    found = set()
    for flips in itertools.product((0, 1), repeat=len(cycles)):
        p, q = [None] * n, [None] * n
        for cycle, flip in zip(cycles, flips):
            for position, edge in enumerate(cycle):
                target = p if (position + flip) % 2 == 0 else q
                if target[edge.row] is not None:
                    raise DecompositionFailure(f"row {edge.row} coloured twice")
                target[edge.row] = edge.col
        if sorted(p) != list(range(n)) or sorted(q) != list(range(n)):
            raise DecompositionFailure("walk colouring is not a pair of permutations")
        found.add(_unordered(p, q))
    return sorted(found, key=lambda d: (d.p, d.q))


def brute_force_decompositions(matrix):
    """Exhaustive oracle over all V! permutations; only sensible for small V."""
    _require_valid(matrix)
    n = matrix.size
    entries = matrix.entries
    found = set()
    for p in itertools.permutations(range(n)):
        if any(entries[j][p[j]] == 0 for j in range(n)):
            continue
        q = []
        for j in range(n):
            rest = [k for k in range(n) if entries[j][k] - (1 if p[j] == k else 0) == 1]
            q.append(rest[0])
        if sorted(q) == list(range(n)):
            found.add(_unordered(p, q))
    return sorted(found, key=lambda d: (d.p, d.q))


def char_poly(matrix):
    """
    det(x*I - M) with exact integer coefficients.

    The empty matrix (the unknot) gets the zero polynomial.
    """
    _require_valid(matrix)
    n = matrix.size
    if n == 0:
        return ZERO
    logger.debug(f"Computing characteristic polynomial of a {n}x{n} matrix")
    rows = [[ZZ(e) for e in row] for row in matrix.entries]
    dm = DomainMatrix(rows, (n, n), ZZ)
    return IntPolynomial.from_dup(dm.charpoly())


def conway_number_from_poly(poly, crossings):
    """
    Read the Conway number P'(2)/V off a characteristic polynomial.

    Args:
        poly: the characteristic polynomial, or the zero polynomial
        crossings: V, the crossing count

    Returns:
        int: 1 for the unknot, 0 for separated components, else P'(2)/V

    Raises:
        NonZeroRemainder: poly has no factor x-2
        NotDivisible: P'(2) is not a multiple of V
    """
    if crossings < 0:
        raise ValueError(f"crossing count must be non-negative, got {crossings}")
    if crossings == 0:
        return 1
    if poly.is_zero():
        return 0
    value = poly.div_exact(X_MINUS_2)(2)
    if value % crossings:
        raise NotDivisible(value, crossings)
    return abs(value) // crossings
