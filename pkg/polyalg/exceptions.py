from knot_algebra.exceptions import KnotAlgebraError


class NonZeroRemainder(KnotAlgebraError):
    """Exact division left a remainder."""

    def __init__(self, dividend, divisor, remainder):
        self.dividend = dividend
        self.divisor = divisor
        self.remainder = remainder
        super().__init__(
            f"({dividend}) is not divisible by ({divisor}): remainder {remainder}"
        )
