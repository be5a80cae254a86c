"""
Gauss codes of alternating diagrams.

Text form: ``O<n>`` / ``U<n>`` tokens separated by whitespace, components
separated by ``;``, crossing ids 1..V, case-insensitive. Example: the trefoil
is ``O1 U2 O3 U1 O2 U3``.
"""

import logging
from collections import Counter, namedtuple
from dataclasses import dataclass

import parsy as p

from knotgraph.matrix import KnotMatrix
from .exceptions import GaussSyntaxError, NonAlternating, BadCrossingUse

logger = logging.getLogger(__name__)

OVER = 'O'
UNDER = 'U'

Visit = namedtuple('Visit', ['crossing', 'passing'])


@dataclass(frozen=True)
class GaussCode:
    components: tuple = ()

    def __post_init__(self):
        object.__setattr__(
            self, 'components',
            tuple(tuple(Visit(int(c), str(s)) for c, s in comp) for comp in self.components),
        )

    @property
    def crossing_count(self):
        return sum(len(comp) for comp in self.components) // 2

    def __str__(self):
        return " ; ".join(
            " ".join(f"{visit.passing}{visit.crossing}" for visit in comp)
            for comp in self.components
        )

    def to_json(self):
        return [[[visit.crossing, visit.passing] for visit in comp] for comp in self.components]


# Grammar

whitespace = p.regex(r'\s*')


def lexeme(parser):
    return parser << whitespace


passing = p.regex(r'[OoUu]').map(str.upper).desc("'O' or 'U'")
crossing_id = p.regex(r'[1-9][0-9]*').map(int).desc('crossing id')
visit = lexeme(p.seq(passing, crossing_id).combine(lambda side, crossing: Visit(crossing, side)))
semicolon = lexeme(p.string(';'))
component = visit.at_least(1)
gauss_code = whitespace >> component.sep_by(semicolon, min=1)


def offending_token(text, index):
    rest = text[index:].split()
    return rest[0] if rest else 'end of input'


def parse_gauss_code(text):
    """
    Parse and validate a Gauss code.

    Raises:
        GaussSyntaxError: malformed token
        NonAlternating: O/U do not alternate cyclically in a component
        BadCrossingUse: an id is not used once as O and once as U
    """
    try:
        components = gauss_code.parse(text)
    except p.ParseError as e:
        token = offending_token(text, e.index)
        logger.error(f"Gauss code syntax error at {e.index}: {token!r}")
        raise GaussSyntaxError(token, e.index) from e

    code = GaussCode(tuple(tuple(comp) for comp in components))
    validate_gauss_code(code)
    return code


def validate_gauss_code(code):
    for number, comp in enumerate(code.components, start=1):
        for i, current in enumerate(comp):
            following = comp[(i + 1) % len(comp)]
            if current.passing == following.passing:
                raise NonAlternating(
                    f"component {number}: {current.passing}{current.crossing} is followed by "
                    f"{following.passing}{following.crossing}"
                )

    uses = Counter(visit for comp in code.components for visit in comp)
    ids = {visit.crossing for visit in uses}
    expected = set(range(1, len(ids) + 1))
    if ids != expected:
        raise BadCrossingUse(f"crossing ids {sorted(ids)} are not 1..{len(ids)}")
    for crossing in sorted(ids):
        for side in (OVER, UNDER):
            count = uses[Visit(crossing, side)]
            if count != 1:
                raise BadCrossingUse(f"crossing {crossing} used {count} times as {side}")


def to_matrix(code):
    """
    Orient each segment from its Over end to its Under end and count edges.

    Returns:
        KnotMatrix
    """
    n = code.crossing_count
    rows = [[0] * n for _ in range(n)]
    for comp in code.components:
        for i, start in enumerate(comp):
            end = comp[(i + 1) % len(comp)]
            tail, head = (start, end) if start.passing == OVER else (end, start)
            rows[tail.crossing - 1][head.crossing - 1] += 1
    return KnotMatrix(tuple(tuple(row) for row in rows))


def relabel(code, perm):
    """
    Rename crossing ``i`` to ``perm[i - 1]``.

    Args:
        perm: a permutation of 1..V as a sequence
    """
    if sorted(perm) != list(range(1, code.crossing_count + 1)):
        raise BadCrossingUse(f"{list(perm)} is not a permutation of 1..{code.crossing_count}")
    return GaussCode(tuple(
        tuple(Visit(perm[visit.crossing - 1], visit.passing) for visit in comp)
        for comp in code.components
    ))
