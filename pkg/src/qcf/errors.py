"""Exception hierarchy shared by the pipeline modules."""


class QCFError(Exception):
    """Base class for all library errors."""


class NotOnCurve(QCFError, ValueError):
    pass


class FrameMismatch(QCFError, ValueError):
    pass


class SingularCurve(QCFError, ValueError):
    pass


class ZeroBasepointOrdinate(QCFError, ValueError):
    pass


class LengthMismatch(QCFError, ValueError):
    pass


class CoordinateTooLarge(QCFError, ArithmeticError):
    """Raised when a point coordinate exceeds the configured bit-length cap."""


class UnsupportedParameterRegion(QCFError, ValueError):
    """The leading coefficient (2 + alpha^5)/6 is not positive."""


class IdentityViolation(QCFError, AssertionError):
    """A constructed sextuple fails X1^5+X2^5+X3^5 = Y1^3+Y2^3+Y3^3.

    Only an upstream bug can trigger this.
    """


class NotSingular(QCFError, ValueError):
    pass


class InvalidPreset(QCFError, ValueError):
    pass
