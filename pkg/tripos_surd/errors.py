"""Errors for the tripos surd toolkit."""


class TriposException(Exception):
    """Base class for tripos surd exceptions."""


class ArgumentError(TriposException, ValueError):
    """An argument violates its precondition."""


class DomainError(TriposException, ArithmeticError):
    """A value lies outside the mathematical domain of the operation."""


class PoleError(DomainError):
    """The rational correction term of a surd form has a zero denominator."""


class VerificationFailure(TriposException):
    """A reproduction check did not pass."""
