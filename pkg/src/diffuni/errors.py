"""Exception hierarchy for diffuni."""


class DiffUniError(ValueError):
    """Base class for all errors raised by this package."""


class ModulusError(DiffUniError):
    pass


class DivisionByZero(DiffUniError, ZeroDivisionError):
    pass


class DegenerateEquation(DiffUniError):
    pass


class OrderError(DiffUniError):
    pass


class UndefinedResultant(DiffUniError):
    pass


class ZeroPolynomial(DiffUniError):
    pass


class ZeroDirection(DiffUniError):
    """The direction alpha of a derivative was zero."""


class NotTAlphaInvariant(DiffUniError):
    """A polynomial is not of the form g(x^2 + alpha*x)."""


class DegenerateLeading(DiffUniError):
    pass


class NotAPolynomialMap(DiffUniError):
    pass


class UnsupportedDegree(DiffUniError):
    pass


class FieldTooLarge(DiffUniError):
    def __init__(self, degree, limit):
        super().__init__(f"field of degree {degree} required, limit is {limit}")
        self.degree = degree
        self.limit = limit


class NotOdd(DiffUniError):
    pass


class NotOddPrime(DiffUniError):
    pass


class IneligiblePrime(DiffUniError):
    pass


class ScaleError(DiffUniError):
    pass


class MNotMember(DiffUniError):
    pass
