from knot_algebra.exceptions import KnotAlgebraError


class UnknownFamily(KnotAlgebraError):
    """The family name is not one of the closed-form families."""


class FamilyArityMismatch(KnotAlgebraError):
    """Wrong number of ribbon parameters for the family."""
