"""Exception types raised across the package."""


class SnwebError(Exception):
    """Base class for every error raised by snweb."""


class NotDivisible(SnwebError, ArithmeticError):
    pass


class DivisionByZero(SnwebError, ZeroDivisionError):
    pass


class NegativeArgument(SnwebError, ValueError):
    pass


class OutOfRange(SnwebError, ValueError):
    pass


class MismatchedAlgebra(SnwebError, ValueError):
    pass


class WebSyntaxError(SnwebError, ValueError):
    """Malformed diagram text (bad JSON, missing fields, unknown generator)."""


class ValidationError(SnwebError, ValueError):
    """A well-formed diagram that violates a structural rule.

    ``slice_index`` is the offending slice (``None`` for whole-diagram
    problems such as a non-empty final boundary).
    """

    def __init__(self, message, slice_index=None):
        self.slice_index = slice_index
        if slice_index is not None:
            message = f"slice {slice_index}: {message}"
        super().__init__(message)


class NotALink(SnwebError, ValueError):
    pass


class NoSuchVertex(SnwebError, IndexError):
    pass


class InvalidSignature(SnwebError, ValueError):
    pass


class OpenDiagram(SnwebError, ValueError):
    pass


class SignatureMismatch(SnwebError, ValueError):
    pass


class HasCrossings(SnwebError, ValueError):
    pass


class HasVertices(SnwebError, ValueError):
    pass


class FlowViolation(SnwebError, ValueError):
    pass


class NoStates(SnwebError, ValueError):
    pass


class NonIntegralResult(SnwebError, ArithmeticError):
    pass
