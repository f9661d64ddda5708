"""Exception hierarchy shared by every construction and validator."""

from __future__ import annotations


class Del4Error(Exception):
    """Base class for all package errors."""


class InvalidArgument(Del4Error, ValueError):
    """An argument violates an operation's precondition."""


class UnsupportedParameter(Del4Error, ValueError):
    """The requested parameter has no construction (odd q, q = 0 mod 6 SQS, ...)."""


class ConstructionError(Del4Error, RuntimeError):
    """A built object failed its own validation.

    Carries the violated invariant so a formula bug never goes unnoticed.
    """

    def __init__(self, message: str, invariant: str | None = None):
        super().__init__(message)
        self.invariant = invariant


class BudgetExhausted(Del4Error, RuntimeError):
    """A search ran out of its time or node budget before finishing."""


class InternalError(Del4Error, AssertionError):
    """Two independent checks disagreed."""
