"""Exception types shared across the package.

All domain errors subclass ValueError so callers that only care about
"bad input" can catch a single built-in type.
"""


class RiggedSpaceError(ValueError):
    """Base class for domain errors raised by this package."""


class LadderSpecError(RiggedSpaceError):
    """Level dimensions are not a strictly increasing sequence of positive
    integers, or a requested level does not exist."""


class LevelOrderError(RiggedSpaceError):
    """An inclusion was requested into a level below the vector's own."""


class LadderMismatchError(RiggedSpaceError):
    """Vectors or maps built over different ladders were combined."""


class InsufficientDataError(RiggedSpaceError):
    """A coefficient or tail bound was requested beyond the certified range."""


class CoconeViolationError(RiggedSpaceError):
    """A level-map family is incompatible with the ladder inclusions.

    ``level`` names the first level whose map disagrees with the restriction
    of its predecessor.
    """

    def __init__(self, level: int, message: str):
        super().__init__(message)
        self.level = level


class AliasingError(RiggedSpaceError):
    """The sampling grid is too coarse for the requested Fourier mode."""


class DiagnosticError(RiggedSpaceError):
    """A diagnostic target is unusable, e.g. has no finite square integral
    on the quadrature window."""
