"""Exception hierarchy shared by every module."""


class QualBeliefError(Exception):
    """Base class for all errors raised by this package."""


class InvalidSubsetError(QualBeliefError, ValueError):
    pass


class FrameMismatchError(QualBeliefError, ValueError):
    pass


class FrameSizeError(QualBeliefError, ValueError):
    pass


class InvalidMeasureError(QualBeliefError, ValueError):
    """A set function or mass function violates a structural invariant."""


class OpenWorldMassError(InvalidMeasureError):
    """Closed-world belief requested from a mass function with m(empty) > 0."""


class NonzeroEmptyValueError(InvalidMeasureError):
    pass


class ContradictionError(QualBeliefError, ValueError):
    """Both A > B and B > A were stated."""

    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class CoverageError(QualBeliefError, ValueError):
    pass


class AxiomError(QualBeliefError):
    """A relation fails an axiom required as a precondition.

    ``axiom`` names the failing axiom and ``witness`` holds the subsets
    (as integer ids) exhibiting the violation.
    """

    def __init__(self, message, axiom=None, witness=None):
        super().__init__(message)
        self.axiom = axiom
        self.witness = witness


class NotWeakOrderError(AxiomError):
    pass


class NotQualitativeBeliefError(AxiomError):
    pass


class NotQualitativeProbabilityError(AxiomError):
    pass


class InternalError(QualBeliefError, AssertionError):
    """A guaranteed postcondition failed; indicates a bug."""


class LpValidationError(QualBeliefError, ValueError):
    pass


class FormatError(QualBeliefError, ValueError):
    """Malformed JSON input."""
