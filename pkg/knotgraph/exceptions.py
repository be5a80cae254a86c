from knot_algebra.exceptions import KnotAlgebraError


class MalformedMatrix(KnotAlgebraError):
    """The matrix breaks the two-per-row / two-per-column rule."""

    def __init__(self, problems):
        self.problems = list(problems)
        super().__init__("Malformed knot matrix: " + "; ".join(self.problems))


class DecompositionFailure(KnotAlgebraError):
    """A component walk could not be two-coloured."""


class NotDivisible(KnotAlgebraError):
    """P'(2) is not a multiple of the crossing count."""

    def __init__(self, value, crossings):
        self.value = value
        self.crossings = crossings
        super().__init__(
            f"P'(2) = {value} is not divisible by the crossing count {crossings}"
        )
