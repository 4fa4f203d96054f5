"""Exception types raised across the package."""

from __future__ import annotations


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


class TruncationMismatch(ValueError):
    """Two series with different truncations were combined."""


class NotDivisible(ArithmeticError):
    """Exact division by S1 left a nonzero remainder."""


class NonTermination(RuntimeError):
    """A recurrence exceeded its expansion budget or revisited an open node."""


class DegenerateTerm(ZeroDivisionError):
    """A summand of an identity has a zero denominator."""


class IntegrityError(AssertionError):
    """A computed object violated a property it is known to have."""
