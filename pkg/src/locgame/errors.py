"""Shared exception types."""


class LimitExceededError(RuntimeError):
    """A configured resource limit was hit (state budget, size guard)."""
