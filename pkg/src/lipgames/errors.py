"""Exception types shared across the package."""


class IntegrityError(RuntimeError):
    """A redundant internal recomputation disagreed with the primary route."""


class BudgetExceededError(ValueError):
    """The requested instance exceeds the configured size budget."""
