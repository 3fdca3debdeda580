"""Exception types shared by all model modules."""


class RgsError(Exception):
    """Base class for every error raised by this package."""


class BlowUp(RgsError):
    """A trajectory left the admissible region before reaching its target.

    Attributes
    ----------
    lambda_reached : group-parameter value where integration stopped
    singular_x : optional refined location of the singularity in the
        model's own coordinate (set by callers that translate the
        flow parameter, e.g. the effective-coupling driver)
    """

    def __init__(self, message, lambda_reached=None, singular_x=None):
        super().__init__(message)
        self.lambda_reached = lambda_reached
        self.singular_x = singular_x


class StepLimit(RgsError):
    """The integrator exhausted its step budget."""


class DerivativeUnavailable(RgsError):
    """A sampler cannot supply a requested partial derivative."""


class StencilOutOfDomain(RgsError):
    """A finite-difference stencil hit a non-finite function value."""


class ConstraintViolated(RgsError):
    """Preconditions on model parameters are not met."""


class NoRootInBracket(RgsError):
    """Bracketed root search failed to enclose a root."""


class QuadratureSingularity(RgsError):
    """The integrand of a quadrature vanishes or diverges inside the range."""


class StabilityViolation(RgsError):
    """An explicit scheme was configured beyond its stability bound."""


class DomainTooNarrow(RgsError):
    """Boundary influence would contaminate a requested sample point."""


class CFLViolation(RgsError):
    """Marching step too large for the grid's fastest mode."""


class WindowTooWide(RgsError):
    """Boundary data derivatives blow up inside the requested window."""


class NotInvertible(RgsError):
    """A profile is not monotone where inversion was requested."""


class SingularProfile(RgsError):
    """A beam profile vanishes inside the evaluation window."""


class CharacteristicsCross(RgsError):
    """Gradient catastrophe reached by the direct beam solver."""


class FoldEncountered(RgsError):
    """A parametric solution has folded (multivalued) at the probe."""


class AccuracyWindowExceeded(RgsError):
    """Argument outside the documented accuracy window of an evaluator."""


class ResidualBelowNoiseFloor(RgsError):
    """All residuals sit at the numeric noise floor; an order fit is
    meaningless."""


class ParseError(RgsError):
    """A scenario file failed validation."""


class CheckFailure(RgsError):
    """At least one verification check failed."""


class TruncationWarning(UserWarning):
    """A truncated quadrature window may be too narrow."""
