"""Exception hierarchy.

Every error raised by the library derives from :class:`SuperfuzzError`, so
callers (the CLI in particular) can catch one type.
"""

from __future__ import annotations


class SuperfuzzError(Exception):
    """Base class for all library errors."""


# partition schemes
class SchemeError(SuperfuzzError, ValueError):
    """A partition scheme violates its invariants."""


class OutOfRangeCut(SchemeError):
    pass


class UnsortedCuts(SchemeError):
    pass


class DuplicateCut(SchemeError):
    pass


class EmptyBlockList(SuperfuzzError, ValueError):
    pass


# algebra
class ShapeMismatch(SuperfuzzError, ValueError):
    pass


class SchemeMismatch(SuperfuzzError, ValueError):
    pass


class BlockMismatch(SuperfuzzError, ValueError):
    pass


# value domains
class RangeViolation(SuperfuzzError, ValueError):
    """A fuzzy value lies outside [0, 1]."""


class ScaleViolation(SuperfuzzError, ValueError):
    """A scaled fit value lies outside [-m, m]."""


class DomainViolation(SuperfuzzError, ValueError):
    """A state value is not in its declared domain."""


# models
class DimensionMismatch(SuperfuzzError, ValueError):
    pass


class NonBinaryInitial(SuperfuzzError, ValueError):
    pass


class KindMismatch(SuperfuzzError, ValueError):
    pass


# io
class ParseError(SuperfuzzError):
    """Input is not valid JSON or cannot be read."""


class SchemaError(SuperfuzzError):
    """JSON parsed but does not fit the expected layout."""


class ValidationError(SuperfuzzError):
    """Structurally valid input that breaks model invariants.

    Parameters
    ----------
    issues : list of ModelIssue
        Every violation found, not just the first.
    """

    def __init__(self, issues, message=None):
        self.issues = list(issues)
        if message is None:
            message = "; ".join(str(i) for i in self.issues) or "invalid model"
        super().__init__(message)
