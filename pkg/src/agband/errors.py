"""Shared exception types."""


class ClosureError(ValueError):
    """A subset is not closed under the table.

    The offending product is kept as ``witness = (i, j, product)`` with all
    three indices relative to the ambient groupoid.
    """

    def __init__(self, message, witness):
        super().__init__(message)
        self.witness = witness


class ParseError(ValueError):
    """Malformed term or identity text; ``offset`` is a 0-based byte offset."""

    def __init__(self, message, offset):
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset


class VarietyError(ValueError):
    """An input groupoid fails a variety that the operation requires.

    ``report`` carries the failing per-identity report when available.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class ResourceLimitError(RuntimeError):
    """The request is outside the supported size envelope."""


class SearchInvariantError(RuntimeError):
    """An exhaustive search failed where theory says it cannot.

    Raised loudly instead of returning a soft failure: hitting this means a
    table that should have a guaranteed witness does not, so either the input
    is corrupt or the library has a bug.
    """
