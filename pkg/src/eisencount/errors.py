"""Shared exception types."""


class BudgetExceededError(RuntimeError):
    """A requested computation exceeds a configured resource budget.

    Raised instead of silently truncating: callers asked for more work
    (enumeration size, sieve memory) than the budget allows and must
    either raise the budget explicitly or shrink the request.
    """
