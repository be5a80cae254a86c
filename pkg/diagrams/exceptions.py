from knot_algebra.exceptions import KnotAlgebraError


class GaussSyntaxError(KnotAlgebraError):
    """Malformed Gauss-code text."""

    def __init__(self, token, position):
        self.token = token
        self.position = position
        super().__init__(f"Unexpected {token!r} at position {position} in Gauss code")


class NonAlternating(KnotAlgebraError):
    """Over and under passes do not alternate around a component."""


class BadCrossingUse(KnotAlgebraError):
    """A crossing id is not used exactly once over and once under."""


class AlternationConflict(KnotAlgebraError):
    """The diagram admits no alternating over/under assignment."""


class ClosureDisconnected(KnotAlgebraError):
    """A join or closure produced a circle without crossings."""


class EmptyDiagram(KnotAlgebraError):
    """An operation needs at least one crossing."""


class InvalidRibbon(KnotAlgebraError):
    """Ribbon crossing counts must be positive integers."""


class SpecSyntaxError(KnotAlgebraError):
    """Malformed family spec text."""

    def __init__(self, token, position):
        self.token = token
        self.position = position
        super().__init__(f"Unexpected {token!r} at position {position} in family spec")


class TooManyCrossings(KnotAlgebraError):
    """The diagram exceeds the configured crossing limit."""

    def __init__(self, crossings, limit):
        self.crossings = crossings
        self.limit = limit
        super().__init__(f"{crossings} crossings exceeds the limit of {limit}")
