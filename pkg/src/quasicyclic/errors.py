"""Exception hierarchy.

Every error raised on purpose by the library derives from :class:`QCError`,
which lets the CLI map library failures to exit status 2.
"""


class QCError(Exception):
    pass


class BadArguments(QCError, ValueError):
    pass


class DegreeMismatch(QCError, ValueError):
    pass


class NotIrreducible(QCError, ValueError):
    pass


class NotPrimitive(QCError, ValueError):
    pass


class FieldMismatch(QCError, ValueError):
    pass


class ZeroInverse(QCError, ZeroDivisionError):
    pass


class ZeroArgument(QCError, ValueError):
    pass


class ZeroScalar(QCError, ValueError):
    pass


class NotADivisor(QCError, ValueError):
    pass


class TooLarge(QCError, ValueError):
    """An enumeration or table would exceed the configured cap."""


class CapExceeded(QCError, RuntimeError):
    pass


class NoInteriorCoefficient(QCError, ValueError):
    pass


class EqualSubspaces(QCError, ValueError):
    pass


class TrinomialReducible(QCError, ValueError):
    pass


class DivisibilityViolated(QCError, ValueError):
    pass


class NotPrime(QCError, ValueError):
    pass


class ConditionFailed(QCError, ValueError):
    pass


class GcdViolated(QCError, ValueError):
    pass


class TooFewWords(QCError, ValueError):
    pass


class NotASubspace(QCError, ValueError):
    """An element list is not closed under addition and scaling."""


class ParseError(QCError, ValueError):
    pass
