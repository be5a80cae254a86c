"""
Conway functions: multilinear forms in the ribbon variables a_1..a_N with
every coefficient +1, stored as a set of index subsets. The empty subset is
the constant term 1.

Text form: ``+a1*a2*a3 +a1 +a3``, with ``+1`` for the constant term.
"""

import logging
from dataclasses import dataclass
from math import prod

import parsy as p
import sympy

from diagrams.gauss import offending_token
from .exceptions import ArityMismatch, NotMultilinear, ConwaySyntaxError, EmptyVector

logger = logging.getLogger(__name__)


def ribbon_symbols(n):
    return tuple(sympy.symbols(f'a1:{n + 1}')) if n else ()


def _term_key(term):
    return (-len(term), sorted(term))


@dataclass(frozen=True)
class ConwayFunction:
    n: int
    terms: frozenset

    def __post_init__(self):
        terms = frozenset(frozenset(term) for term in self.terms)
        object.__setattr__(self, 'terms', terms)
        for term in terms:
            if any(index < 1 or index > self.n for index in term):
                raise ArityMismatch(f"term {sorted(term)} uses a variable outside a1..a{self.n}")

    @classmethod
    def from_expr(cls, expr, n):
        """Read a sympy expression in a1..an, expanding products."""
        symbols = ribbon_symbols(n)
        terms = []
        for monomial, coeff in sympy.Poly(sympy.expand(expr), *symbols).terms():
            if coeff != 1 or any(power > 1 for power in monomial):
                raise NotMultilinear(
                    f"term {coeff}*{sympy.Mul(*(s ** e for s, e in zip(symbols, monomial)))} "
                    "is not a +1 multilinear monomial"
                )
            terms.append(frozenset(i + 1 for i, power in enumerate(monomial) if power))
        return cls(n, frozenset(terms))

    @classmethod
    def from_text(cls, text, n):
        """Read a formula written with a1..an, such as ``(a1*a2 + 1)*(a3*a4 + 1) + a1*a4``."""
        symbols = ribbon_symbols(n)
        expr = sympy.parse_expr(text, local_dict={str(s): s for s in symbols})
        return cls.from_expr(expr, n)

    def as_expr(self):
        symbols = ribbon_symbols(self.n)
        return sympy.Add(*(sympy.Mul(*(symbols[i - 1] for i in term)) for term in self.terms))

    def ordered_terms(self):
        return sorted(self.terms, key=_term_key)

    def evaluate(self, a):
        a = list(a)
        if len(a) != self.n:
            raise ArityMismatch(f"function of {self.n} ribbons evaluated at {len(a)} values")
        return sum(prod(a[i - 1] for i in term) for term in self.terms)

    def term_count(self):
        return len(self.terms)

    def all_ones(self):
        return self.evaluate([1] * self.n)

    def specialize_zero(self, j):
        """Set a_j = 0: drop every term containing j and renumber the rest."""
        if not 1 <= j <= self.n:
            raise ArityMismatch(f"variable a{j} outside a1..a{self.n}")
        kept = [
            frozenset(i - 1 if i > j else i for i in term)
            for term in self.terms if j not in term
        ]
        return ConwayFunction(self.n - 1, frozenset(kept))

    def term_parities(self):
        return {len(term) % 2 for term in self.terms}

    def term_parity(self):
        """'odd' or 'even' when every monomial has the same variable-count parity, else 'mixed'."""
        parities = self.term_parities()
        if len(parities) != 1:
            return 'mixed'
        return 'odd' if parities.pop() else 'even'

    def to_json(self):
        return [sorted(term) for term in self.ordered_terms()]

    def __str__(self):
        return format_conway_function(self)


def format_conway_function(function):
    parts = []
    for term in function.ordered_terms():
        body = "*".join(f"a{i}" for i in sorted(term)) if term else "1"
        parts.append(f"+{body}")
    return " ".join(parts)


# Text grammar

whitespace = p.regex(r'\s*')


def lexeme(parser):
    return parser << whitespace


variable = (p.string('a') >> p.regex(r'[1-9][0-9]*').map(int)).desc('variable a<n>')
monomial = variable.sep_by(p.string('*'), min=1).map(frozenset)
constant = p.string('1').result(frozenset())
term = lexeme(p.string('+') >> whitespace >> (monomial | constant))
conway_text = whitespace >> term.at_least(1)


def parse_conway_function(text, n=None):
    """
    Parse the ``+a1*a2 +a3`` text form.

    Args:
        n: number of ribbon variables; defaults to the highest index used
    """
    try:
        terms = conway_text.parse(text)
    except p.ParseError as e:
        token = offending_token(text, e.index)
        raise ConwaySyntaxError(token, e.index) from e
    if len(set(terms)) != len(terms):
        raise NotMultilinear(f"repeated term in {text!r}")
    if n is None:
        n = max((max(t) for t in terms if t), default=0)
    return ConwayFunction(n, frozenset(terms))


# Gauss brackets

def _check_vector(a):
    a = list(a)
    if not a:
        raise EmptyVector("a Gauss bracket needs at least one ribbon")
    return a


def _continuant(values, one=1):
    previous, current = 0, one
    for value in values:
        previous, current = current, value * current + previous
    return current


def gauss_bracket_numerator(a):
    """p_i = a_i p_{i-1} + p_{i-2} with p_0 = 1, p_{-1} = 0, consuming a_1 first."""
    return _continuant(_check_vector(a))


def gauss_bracket_denominator(a):
    """The numerator of (a_2, ..., a_N); 1 for a single ribbon."""
    return _continuant(_check_vector(a)[1:])


def gauss_bracket_function(n):
    """The numerator of an n-ribbon rational knot as a Conway function."""
    if n < 1:
        raise EmptyVector("a Gauss bracket needs at least one ribbon")
    expr = _continuant(ribbon_symbols(n), one=sympy.Integer(1))
    return ConwayFunction.from_expr(expr, n)
