"""
Algebraic tangle expressions over ribbon variables a_1..a_N.

``H(i)`` is a horizontal ribbon of a_i crossings (the integer tangle [a_i]),
``V(i)`` a vertical one (1/[a_i]). ``+`` places tangles side by side and ``*``
stacks them bottom to top. An expression can be built into a tangle for a
concrete vector ``a`` or reduced to its fraction pair (p, q), whose numerator
p is the determinant of the numerator closure.
"""

from dataclasses import dataclass

from .tangles import Direction, ribbon_tangle, join_ew, join_ns, numerator_closure


class TangleExpr:
    def __add__(self, other):
        return Add(_flatten(Add, self) + _flatten(Add, other))

    def __mul__(self, other):
        return Stack(_flatten(Stack, self) + _flatten(Stack, other))

    def closure(self, a):
        """The numerator closure of this expression at ``a``."""
        return numerator_closure(self.tangle(a))

    def arity(self):
        return max(self.variables(), default=0)


def _flatten(kind, expr):
    return expr.terms if isinstance(expr, kind) else (expr,)


@dataclass(frozen=True)
class Twist(TangleExpr):
    index: int
    vertical: bool = False

    def tangle(self, a):
        direction = Direction.VERTICAL if self.vertical else Direction.HORIZONTAL
        return ribbon_tangle(a[self.index - 1], direction)

    def fraction(self, a):
        value = a[self.index - 1]
        return (1, value) if self.vertical else (value, 1)

    def variables(self):
        return {self.index}

    def __str__(self):
        return f"1/[a{self.index}]" if self.vertical else f"[a{self.index}]"


@dataclass(frozen=True)
class Add(TangleExpr):
    terms: tuple

    def tangle(self, a):
        result = self.terms[0].tangle(a)
        for term in self.terms[1:]:
            result = join_ew(result, term.tangle(a))
        return result

    def fraction(self, a):
        p, q = self.terms[0].fraction(a)
        for term in self.terms[1:]:
            tp, tq = term.fraction(a)
            p, q = p * tq + q * tp, q * tq
        return p, q

    def variables(self):
        return set().union(*(term.variables() for term in self.terms))

    def __str__(self):
        return "(" + " + ".join(str(term) for term in self.terms) + ")"


@dataclass(frozen=True)
class Stack(TangleExpr):
    terms: tuple

    def tangle(self, a):
        result = self.terms[0].tangle(a)
        for term in self.terms[1:]:
            result = join_ns(result, term.tangle(a))
        return result

    def fraction(self, a):
        p, q = self.terms[0].fraction(a)
        for term in self.terms[1:]:
            tp, tq = term.fraction(a)
            p, q = p * tp, p * tq + q * tp
        return p, q

    def variables(self):
        return set().union(*(term.variables() for term in self.terms))

    def __str__(self):
        return "(" + " * ".join(str(term) for term in self.terms) + ")"


def H(index):
    return Twist(index)


def V(index):
    return Twist(index, vertical=True)


def tangle_fraction(expr, a):
    """The (numerator, denominator) pair of ``expr`` at ``a``."""
    return expr.fraction(a)
