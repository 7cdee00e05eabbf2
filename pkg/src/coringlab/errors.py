"""Exception hierarchy for coringlab.

Everything raised on purpose derives from CoringlabError so callers (and the
CLI) can map failures to exit codes without matching on message text.
"""


class CoringlabError(Exception):
    """Base class for all coringlab errors."""


class FieldMismatch(CoringlabError):
    """Two objects over different ground fields were combined."""


class ShapeError(CoringlabError):
    """Matrix dimensions are incompatible with the requested operation."""


class AlgebraMismatch(CoringlabError):
    """Module or map endpoints do not live over the expected algebra."""


class NotBalanced(CoringlabError):
    """A map does not descend to the tensor product quotient."""


class HypothesisFailed(CoringlabError):
    """A runtime flatness/equalizer-preservation check failed.

    Carries `checks`, a list of (label, ok) pairs so callers can see which
    hypothesis broke.
    """

    def __init__(self, message, checks=None):
        super().__init__(message)
        self.checks = list(checks) if checks else []


class ValidationFailed(CoringlabError):
    """An object failed its axiom suite.

    Carries `report`, the ValidationReport that triggered the failure.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class NotQuasiFinite(CoringlabError):
    """Cohom requested for a comodule that is not finitely cogenerated
    in the required sense (underlying module not projective)."""


class TriangleFailure(CoringlabError):
    """An adjunction triangle identity failed on a sample comodule."""


class InternalAxiomError(CoringlabError):
    """A constructed object failed an axiom that should hold by theorem.

    This signals a bug in coringlab itself, not in user input.
    """


class CertificateMismatch(CoringlabError):
    """A certificate does not match the object or map it was applied to."""


class MalformedInput(CoringlabError):
    """A serialized workspace cannot be decoded: bad JSON structure, bad
    scalars, unresolved or cyclic references, wrong shapes, or a tensor
    presentation pin that does not match what this build computes."""
