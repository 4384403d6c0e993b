"""Exception types raised across the package."""


class PfqError(Exception):
    """Base class for all library errors."""


class NotDivisible(PfqError):
    """An exact polynomial division left a nonzero remainder."""


class NonUnitConstantTerm(PfqError):
    """A series inversion was requested for a series without a rational unit constant term."""


class OddDimension(PfqError):
    pass


class TooLarge(PfqError):
    pass


class IndexOutOfRange(PfqError):
    pass


class ParityMismatch(PfqError):
    pass


class ZeroPivotPfaffian(PfqError):
    pass


class NotAdmissible(PfqError):
    pass


class OrderTooLow(PfqError):
    pass


class TooManyVariables(PfqError):
    pass


class NotContained(PfqError):
    pass


class SingularBasis(PfqError):
    pass


class NotReciprocal(PfqError):
    """A Laurent polynomial could not be rewritten in u = x + 1/x."""
