"""Custom exception hierarchy for monodromy-atlas."""


class AtlasError(Exception):
    """Base exception for all monodromy-atlas errors."""

    def __init__(
        self,
        message: str,
        user_message: str | None = None,
        context: dict | None = None,
    ):
        super().__init__(message)
        self.message = message
        self.user_message = user_message or message
        self.context = context or {}


class InvariantViolation(AtlasError):
    """Raised when an internal consistency check fails."""


# Maps


class InvalidMapError(AtlasError):
    """Raised when a rotation system is not a valid oriented map."""


class NotPermutation(InvalidMapError):
    """Raised when sigma or alpha is not a permutation of the darts."""


class NotInvolution(InvalidMapError):
    """Raised when alpha squared is not the identity."""


class HasFixedPoint(InvalidMapError):
    """Raised when alpha fixes a dart."""


class NotConnected(InvalidMapError):
    """Raised when sigma and alpha do not act transitively."""


# Marked graphs and subgroups


class InvalidGraphError(AtlasError):
    """Raised when a map is not a marked trivalent sphere graph."""


class DegenerateGraph(InvalidGraphError):
    """Raised for the edge joining two B2 ends, which has index zero."""


class InvalidSubgroupError(AtlasError):
    """Raised when a permutation pair is not a coset action of the modular group."""


class GenusNotZero(InvalidSubgroupError):
    """Raised when a permutation pair has positive genus."""


class InvalidEt(AtlasError):
    """Raised when an enumeration is requested outside ET in {12, 24, 36, 48}."""


# Fibers


class AlreadyStar(AtlasError):
    """Raised when twisting a fiber that is already a *-fiber."""


class NotMultipleOf12(AtlasError):
    """Raised when a fiber configuration has Euler number not divisible by 12."""


# Branched covers


class DegreeTooLarge(AtlasError):
    """Raised when a realizability search exceeds the configured degree."""


class InvalidProfile(AtlasError):
    """Raised when a branch profile has a partition of the wrong size."""


class ShapeMismatch(AtlasError):
    """Raised when ramification data does not fit the graph datum."""


class ParseError(AtlasError):
    """Raised on malformed graph datum or ramification text."""


# Witnesses


class NotCoprime(AtlasError):
    """Raised when the numerator and denominator of a witness share a factor."""


class NoRationalPoint(AtlasError):
    """Raised when a conic parametrization degenerates."""


class DegenerateParameters(AtlasError):
    """Raised when construction parameters collapse the ramification datum."""


class VerificationFailed(AtlasError):
    """Raised when a constructed witness does not have its stated profile."""


# Command line


class UsageError(AtlasError):
    """Raised for malformed command lines."""
