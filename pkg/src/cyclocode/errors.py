"""Exception types shared across the package."""


class CyclocodeError(Exception):
    """Base class for all library errors."""


class NotPrime(CyclocodeError, ValueError):
    pass


class NotIrreducible(CyclocodeError, ValueError):
    pass


class NotMonic(CyclocodeError, ValueError):
    pass


class FieldMismatch(CyclocodeError, ValueError):
    pass


class ZeroToNegativePower(CyclocodeError, ZeroDivisionError):
    pass


class GcdViolation(CyclocodeError, ValueError):
    pass


class NotMonomial(CyclocodeError, ValueError):
    pass


class InsufficientTerms(CyclocodeError, ValueError):
    pass


class InconsistentInput(CyclocodeError, ValueError):
    pass


class InvalidParams(CyclocodeError, ValueError):
    pass


class FieldTooLarge(CyclocodeError, ValueError):
    pass


class ConditionUnmet(CyclocodeError, ValueError):
    """A closed-form formula was requested outside its applicability range."""


class SubfieldViolation(CyclocodeError, ArithmeticError):
    """A value expected to lie in the base subfield does not."""
