"""Exception types shared across the package."""


class QuiverInputError(ValueError):
    """Malformed or inconsistent input (vertex mismatch, bad framing, ...)."""


class UndefinedSlopeError(ValueError):
    """Slope requested for the zero dimension vector."""


class InfeasibleTypeError(ValueError):
    """A polystable type whose local quiver would need negative arrow counts."""


class PreconditionError(ValueError):
    """An operation was called outside its domain (e.g. non-coprime input)."""


class ConsistencyError(AssertionError):
    """Two routes that must agree did not, or a guaranteed property failed.

    Raised instead of silently picking one answer; seeing this means either a
    bug or a counterexample to a structural claim the code relies on.
    """
