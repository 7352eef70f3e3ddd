"""Exception hierarchy.

Validation problems derive from ``ValidationError`` (CLI exit code 2);
``PossiblyInfinite`` is kept separate because callers usually want to
retry it with a larger bound or in truncated mode (CLI exit code 3).
"""


class FincatError(Exception):
    pass


class ValidationError(FincatError, ValueError):
    pass


class DuplicateLabel(ValidationError):
    pass


class UnknownEndpoint(ValidationError):
    pass


class MismatchedArrowEquivalence(ValidationError):
    pass


class MismatchedRelation(ValidationError):
    pass


class NotComposable(ValidationError):
    pass


class UnknownObject(ValidationError, KeyError):
    pass


class UnknownMorphism(ValidationError, KeyError):
    pass


class WordOutOfRange(ValidationError):
    pass


class PartialMap(ValidationError):
    pass


class EndpointIncoherent(ValidationError):
    pass


class CodomainMismatch(ValidationError):
    pass


class IllTypedComponent(ValidationError):
    pass


class NotGroupoidalizable(ValidationError):
    pass


class ContravariantUnsupported(ValidationError):
    pass


class GluingViolation(ValidationError):
    pass


class InvalidGraph(ValidationError):
    pass


class PossiblyInfinite(FincatError):
    """Bounded enumeration could not show that the category is finite."""

    def __init__(self, message, *, max_word_length=None, classes=None):
        super().__init__(message)
        self.max_word_length = max_word_length
        self.classes = classes


class BudgetExceeded(FincatError):
    """A brute-force check ran out of its trial budget (result indeterminate)."""


class MalformedDocument(ValidationError):
    pass
