"""Exception types shared across the package."""


class LapsepError(Exception):
    """Base class for lapsep-specific errors."""


class EmptyGraphError(LapsepError, ValueError):
    """The graph has no edges, so its Laplacian has zero trace."""


class Graph6Error(LapsepError, ValueError):
    """Malformed graph6 input.  ``offset`` is the byte position of the fault."""

    def __init__(self, message: str, offset: int | None = None):
        self.offset = offset
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)


class CrossValidationError(LapsepError):
    """The matrix PPT test and the degree condition disagreed.

    The two tests are expected to agree on every graph Laplacian; a mismatch
    means a bug (or a counterexample worth a very close look), so it is never
    swallowed.
    """


class NoEntanglingLabelingError(LapsepError):
    """No labeling violates the degree condition; proven by enumeration."""


class SearchBudgetExceededError(LapsepError):
    """The labeling search ran out of budget without a verdict either way."""
