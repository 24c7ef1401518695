"""Exception types shared across the package."""


class SkewcodeError(Exception):
    """Base class for all library errors."""


class NotPrime(SkewcodeError):
    pass


class DegreeOverflow(SkewcodeError):
    pass


class DivisionByZero(SkewcodeError):
    pass


class ZeroHasNoLog(SkewcodeError):
    pass


class LengthMismatch(SkewcodeError):
    pass


class TowerMismatch(SkewcodeError):
    pass


class DivisionByZeroPolynomial(SkewcodeError):
    pass


class ConjugateByZero(SkewcodeError):
    pass


class ZeroPolynomial(SkewcodeError):
    pass


class FieldTooLarge(SkewcodeError):
    pass


class DimensionMismatch(SkewcodeError):
    pass


class BadParams(SkewcodeError):
    pass


class NoSmallPrimePower(SkewcodeError):
    pass


class PreconditionViolated(SkewcodeError):
    pass


class RankDeficientH(SkewcodeError):
    pass


class InadmissiblePattern(SkewcodeError):
    pass


class BudgetExceeded(SkewcodeError):
    pass


class Uncorrectable(SkewcodeError):
    pass


class NotACodeword(SkewcodeError):
    pass
