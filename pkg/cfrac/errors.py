"""
Error kinds raised by the convergent engine
Each class carries the process exit code the CLI maps it to
"""


class CFError(Exception):
    """Base class for every library error"""
    exit_code = 1


class InputParseError(CFError, ValueError):
    exit_code = 2


class NegativeRadicand(CFError, ValueError):
    exit_code = 3


class PerfectSquare(CFError, ValueError):
    """The value is rational, so it has no periodic expansion"""
    exit_code = 3


class UnsupportedRadicand(CFError, ValueError):
    exit_code = 3


class NoPeriodWithinBound(CFError):
    exit_code = 4


class NotGaloisForm(CFError):
    exit_code = 5


class MethodIndexMismatch(CFError, ValueError):
    exit_code = 6


class NonUnimodular(CFError, ValueError):
    pass


class MismatchedIndices(CFError, ValueError):
    exit_code = 6


class TraceMismatch(CFError):
    """Two independent trace computations disagreed"""
    pass


class InvalidDecomposition(CFError, ValueError):
    pass


class MTooSmall(CFError, ValueError):
    pass


class UnknownIdentity(CFError, KeyError):
    pass


class PellViolation(CFError, ValueError):
    pass


class DerivativeZero(CFError, ZeroDivisionError):
    pass


class EvenOrderUnsupported(CFError, ValueError):
    exit_code = 6


class IdentityFailure(CFError):
    exit_code = 7


class ReferenceMismatch(CFError):
    """A computed value differs from a published reference value"""
    exit_code = 8


class CostInvariantViolation(CFError):
    exit_code = 9
