"""Exception hierarchy.

Errors split into two families: :class:`MathError` for mathematical
failures of valid input (a map that is not a homomorphism, an enumeration
that does not close) and :class:`UsageError` for malformed input.  The CLI
maps them to exit codes 1 and 2.
"""


class CurveGroupsError(Exception):
    pass


class MathError(CurveGroupsError):
    pass


class UsageError(CurveGroupsError, ValueError):
    pass


# exact algebra
class ZeroInverse(MathError, ZeroDivisionError):
    pass


class NotInvertible(MathError):
    pass


class BadMinorSize(UsageError):
    pass


class NotSquare(UsageError):
    pass


class NotDivisible(MathError):
    pass


# words and presentations
class UnknownGenerator(UsageError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class RankMismatch(UsageError):
    pass


class IndexOutOfRange(UsageError):
    pass


class BadConeOrder(UsageError):
    pass


class ParseError(UsageError):
    pass


# subgroups
class CosetLimitExceeded(MathError):
    pass


class NotAHomomorphism(MathError):
    def __init__(self, message, relator=None):
        super().__init__(message)
        self.relator = relator


class InvalidTable(MathError):
    pass


class NotCoprime(UsageError):
    pass


# alexander
class DimensionMismatch(UsageError):
    pass


class InconsistentGrading(MathError):
    pass


class NoDeletableGenerator(MathError):
    pass


class RepresentationNotVerified(MathError):
    pass


# quotient search
class DegreeMismatch(UsageError):
    pass


class DegreeTooLarge(UsageError):
    pass


# topology calculators
class StrandMismatch(UsageError):
    pass


class InconsistentInput(MathError):
    pass


class NotInteger(MathError):
    pass


class BadLcm(UsageError):
    pass


class MonotonicityViolation(MathError):
    def __init__(self, message, violations=()):
        super().__init__(message)
        self.violations = list(violations)
