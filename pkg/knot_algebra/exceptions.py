class KnotAlgebraError(ValueError):
    """Base class for every domain error raised by the knot_algebra apps.

    Management commands turn these into exit status 2, the API into HTTP 400.
    """
