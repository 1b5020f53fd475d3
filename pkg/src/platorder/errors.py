"""Exception hierarchy shared by every module.

Each class carries the CLI exit code it maps to, so the command-line layer
never needs a lookup table of its own.
"""

from __future__ import annotations


class PlatOrderError(Exception):
    exit_code = 1
    kind = "error"


class MalformedInputError(PlatOrderError, ValueError):
    kind = "malformed-input"


class UsageError(PlatOrderError, ValueError):
    kind = "usage"


class ContractViolationError(PlatOrderError, ValueError):
    """A caller broke a documented precondition (e.g. classified a word with a handle)."""

    kind = "contract-violation"


class BudgetExceededError(PlatOrderError, RuntimeError):
    exit_code = 2
    kind = "budget-exceeded"

    def __init__(self, message: str, used: int | None = None):
        super().__init__(message)
        self.used = used


class NotFoundError(PlatOrderError, LookupError):
    exit_code = 2
    kind = "not-found"

    def __init__(self, message: str, limit: int | None = None):
        super().__init__(message)
        self.limit = limit


class IntegrityError(PlatOrderError, AssertionError):
    exit_code = 3
    kind = "integrity"
