"""Exceptions raised by the sixfold package"""


class DomainError(ValueError):
    """Argument outside the domain of an operation, e.g. n < 5 or m < 1."""


class ContractViolation(ValueError):
    """Precondition of an operation broken by the caller."""


class ArithmeticRangeError(OverflowError):
    """Value exceeds the configured `max_value` word range."""


class OracleCapExceeded(MemoryError):
    """Requested sieve limit exceeds the configured `oracle_cap`."""
