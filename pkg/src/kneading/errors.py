"""Exception types raised by the library.

Every error derives from :class:`KneadingError`, itself a ``ValueError``,
so callers that only care about bad input can catch one type.
"""


class KneadingError(ValueError):
    pass


class EmptySequence(KneadingError):
    pass


class NotCoprime(KneadingError):
    pass


class ImproperFraction(KneadingError):
    pass


class NoSuchExpansion(KneadingError):
    pass


class NotUnimodular(KneadingError):
    pass


class SquareDiscriminant(KneadingError):
    pass


class NonpositiveDiscriminant(KneadingError):
    pass


class NotReduced(KneadingError):
    pass


class StepLimitExceeded(KneadingError):
    pass


class ExcludedSpec(KneadingError):
    """The pair (a, s) is (1, 1) or (2, 1), whose discriminant is -3 or 0."""


class DiscriminantMismatch(KneadingError):
    pass


class NotPrimitive(KneadingError):
    pass


class ZeroForm(KneadingError):
    pass


class InternalInconsistency(KneadingError):
    """A computation produced a result that contradicts a proven identity."""
