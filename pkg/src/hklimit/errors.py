"""Shared exception types."""


class ConsistencyError(ArithmeticError):
    """Two independent computations of the same quantity disagree.

    Raised only when an internal cross-check fails; this always indicates
    a bug in one of the computation paths, never bad user input.
    """
