"""Shared exception types."""


class BudgetExceededError(RuntimeError):
    """An enumeration or scan would exceed its configured evaluation budget.

    Raised before any work is done; partial results are never produced.
    """
