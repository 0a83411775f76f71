"""Shared exception types."""


class CapacityError(RuntimeError):
    """A brute-force computation was requested beyond its size cap."""


class InternalConsistencyError(RuntimeError):
    """A structural invariant that should be unbreakable failed."""
