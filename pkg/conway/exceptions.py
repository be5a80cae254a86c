from knot_algebra.exceptions import KnotAlgebraError


class ArityMismatch(KnotAlgebraError):
    """Wrong number of ribbon values for a Conway function."""


class OutOfRange(KnotAlgebraError):
    """No catalog data for this number of ribbons."""


class EmptyVector(KnotAlgebraError):
    """A Gauss bracket needs at least one ribbon."""


class NoRealization(KnotAlgebraError):
    """The catalog entry has no pinned tangle construction."""


class NotMultilinear(KnotAlgebraError):
    """An expression has a repeated variable or a coefficient other than +1."""


class ConwaySyntaxError(KnotAlgebraError):
    """Malformed Conway-function text."""

    def __init__(self, token, position):
        self.token = token
        self.position = position
        super().__init__(f"Unexpected {token!r} at position {position} in Conway function")
