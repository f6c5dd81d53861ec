"""Exception hierarchy shared across the package."""


class ArgFacetsError(Exception):
    """Base class for all errors raised by this package."""


class FrameworkError(ArgFacetsError, ValueError):
    """Structurally invalid framework, argument set, or query."""


class ParseError(FrameworkError):
    """Malformed input text; carries a 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class FormulaError(ArgFacetsError, ValueError):
    """Invalid CNF/QBF formula or DIMACS/QDIMACS text."""


class NotAFacetError(ArgFacetsError, ValueError):
    """Significance was requested for an argument that is not a facet."""


class NotACurrentFacetError(ArgFacetsError, ValueError):
    """A session approval referenced an argument outside the current facets."""


class EmptyHistoryError(ArgFacetsError, ValueError):
    """Undo was requested on a session with no approvals."""


class OracleLimitError(ArgFacetsError, ValueError):
    """The brute-force oracle was asked to sweep too large a framework."""


class BudgetExceededError(ArgFacetsError, RuntimeError):
    """A deadline expired mid-computation.

    ``partial`` carries whatever lower/upper approximation was reached
    before the cutoff (meaning depends on the aborted operation).
    """

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial
