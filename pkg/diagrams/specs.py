"""
Family spec strings.

    twist:V  torus:V  pretzel:a,b,...  rational:a,b,...  chain:k,m,l  unknot
    compose(<spec>,<spec>)  union(<spec>,<spec>)
    twistsum(<spec>,<spec>)  clasp(<spec>,<spec>)
"""

import logging
from dataclasses import dataclass

import parsy as p

from . import builders
from .exceptions import SpecSyntaxError, InvalidRibbon
from .gauss import offending_token
from .tangles import UNKNOT

logger = logging.getLogger(__name__)

LEAF_BUILDERS = {
    'twist': builders.build_twist_chain,
    'torus': builders.build_cyclic_torus,
    'pretzel': builders.build_pretzel,
    'rational': builders.build_rational,
    'chain': builders.build_composition_chain,
}

SINGLE_PARAMETER = {'twist', 'torus'}

COMBINERS = {
    'compose': (builders.compose_knots, 0),
    'union': (builders.disjoint_union, 0),
    'twistsum': (builders.twist_composition, 1),
    'clasp': (builders.link_composition, 2),
}


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple = ()
    children: tuple = ()

    def crossing_count(self):
        """Crossings the built diagram will have, known before building it."""
        if self.kind == 'unknot':
            return 0
        if self.kind in LEAF_BUILDERS:
            return sum(self.params)
        return sum(child.crossing_count() for child in self.children) + COMBINERS[self.kind][1]

    def build(self):
        if self.kind == 'unknot':
            return UNKNOT
        if self.kind in LEAF_BUILDERS:
            build = LEAF_BUILDERS[self.kind]
            if self.kind in SINGLE_PARAMETER:
                return build(self.params[0])
            return build(self.params)
        combine, _ = COMBINERS[self.kind]
        return combine(*(child.build() for child in self.children))

    def __str__(self):
        if self.kind == 'unknot':
            return 'unknot'
        if self.kind in LEAF_BUILDERS:
            return f"{self.kind}:" + ",".join(str(value) for value in self.params)
        return f"{self.kind}(" + ",".join(str(child) for child in self.children) + ")"


# Grammar

whitespace = p.regex(r'\s*')


def lexeme(parser):
    return parser << whitespace


natural = lexeme(p.regex(r'[0-9]+').map(int)).desc('ribbon crossing count')
comma = lexeme(p.string(','))
colon = lexeme(p.string(':'))
lparen = lexeme(p.string('('))
rparen = lexeme(p.string(')'))


def keyword(word):
    return lexeme(p.string(word) << p.regex(r'[a-z]').should_fail('keyword end'))


@p.generate("single-parameter family")
def single():
    kind = yield keyword('twist') | keyword('torus')
    yield colon
    value = yield natural
    return FamilySpec(kind, (value,))


@p.generate("multi-parameter family")
def multi():
    kind = yield keyword('pretzel') | keyword('rational') | keyword('chain')
    yield colon
    values = yield natural.sep_by(comma, min=1)
    return FamilySpec(kind, tuple(values))


@p.generate("composition")
def combined():
    kind = yield keyword('compose') | keyword('union') | keyword('twistsum') | keyword('clasp')
    yield lparen
    first = yield spec
    yield comma
    second = yield spec
    yield rparen
    return FamilySpec(kind, children=(first, second))


unknot = keyword('unknot').result(FamilySpec('unknot'))
spec = single | multi | combined | unknot
family_spec = whitespace >> spec


def _check(node):
    if node.kind in LEAF_BUILDERS:
        if node.kind == 'pretzel' and len(node.params) < 2:
            raise InvalidRibbon("a pretzel needs at least two ribbons")
        if any(value < 1 for value in node.params):
            raise InvalidRibbon(f"ribbon crossing counts must be positive in {node}")
    for child in node.children:
        _check(child)


def parse_family_spec(text):
    """
    Parse a family spec into a FamilySpec tree without building it.

    Raises:
        SpecSyntaxError: malformed text, naming the offending token
        InvalidRibbon: zero ribbon counts or a one-ribbon pretzel
    """
    try:
        node = family_spec.parse(text)
    except p.ParseError as e:
        token = offending_token(text, e.index)
        logger.error(f"Family spec syntax error at {e.index}: {token!r}")
        raise SpecSyntaxError(token, e.index) from e
    _check(node)
    return node


def build_from_spec(text):
    return parse_family_spec(text).build()
