"""Exception hierarchy shared by every module.

A predicate that does not hold is reported through a ``Certificate`` with a
false verdict. The exceptions below are reserved for inputs that violate a
precondition.
"""


class GradedAlgebraError(ValueError):
    """Base class for all errors raised by graded_ideals."""


class GradingError(GradedAlgebraError):
    """Inconsistent grading or a non-homogeneous element where one is required."""


class RingMismatchError(GradedAlgebraError):
    """Operands live in different rings or carry different grade groups."""


class RingTooLargeError(GradedAlgebraError):
    """A ring exceeds the constructor cap or the enumeration table limit."""


class NotProperError(GradedAlgebraError):
    """An ideal equals the whole ring where a proper ideal is required."""


class DisjointnessError(GradedAlgebraError):
    """P ∩ S is non-empty (or I ∩ S is non-empty where disjointness is required)."""


class MultiplicativeSetError(GradedAlgebraError):
    """A multiplicative set reaches 0, has a non-homogeneous generator,
    or is not contained in R_e where a per-grade predicate needs it."""


class HomomorphismError(GradedAlgebraError):
    """A proposed map is not a unital, grade-preserving ring homomorphism."""


class UnknownTheoremError(GradedAlgebraError):
    """No registry entry carries the requested theorem id."""


class SpecDocumentError(GradedAlgebraError):
    """A CLI ring-spec document is malformed or references unknown grades."""
