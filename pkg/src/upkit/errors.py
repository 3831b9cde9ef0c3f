"""Shared exception taxonomy.

Every domain error raised by this package derives from :class:`UpkitError`,
so callers (in particular the CLI) can distinguish bad mathematical input
from genuine bugs.
"""


class UpkitError(Exception):
    """Base class for all domain errors raised by upkit."""


class NotContained(UpkitError):
    """Multiset difference requested where the subtrahend is not contained."""


class WrongTotal(UpkitError):
    """Partition size does not match the group type's N."""


class ParityViolation(UpkitError):
    """A bad-parity part occurs with odd multiplicity."""


class BoundExceeded(UpkitError):
    """An enumeration was requested beyond the configured safety bound."""


class NotInI(UpkitError):
    """A collapse move T^I was requested for a value outside I(lambda)."""


class NotInJ(UpkitError):
    """An expansion move T_J (or a t_c character) was requested outside J(lambda)."""


class NotCanonical(UpkitError):
    """A character was expected to lie in the canonical subgroup but does not."""


class NotInPiece(UpkitError):
    """A partition was expected to lie in the given special piece but does not."""


class MoveNotApplicable(UpkitError):
    """A union/merge move's precondition fails for the given parameter."""


class NotSpringerType(UpkitError):
    """The pair (lambda, eps) is not of Springer type (nonzero defect)."""


class MalformedOutput(UpkitError):
    """An internal consistency check failed; indicates a bug, never bad input."""


class BadParity(UpkitError):
    """A good-parity partition was required."""
