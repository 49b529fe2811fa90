"""Exception hierarchy shared by every module of the package."""


class HandleHomologyError(Exception):
    """Base class for all errors raised by handlehom."""


class ShapeError(HandleHomologyError):
    pass


class IndexOutOfRange(HandleHomologyError, IndexError):
    pass


class InconsistentBoundary(HandleHomologyError):
    """Raised when some composite of boundary maps is nonzero.

    ``degree`` is the k of the failing product d_k d_{k+1}; ``row_label`` is
    the (k-1)-handle and ``col_label`` the (k+1)-handle of the first nonzero
    entry (row-major order).
    """

    def __init__(self, degree, row_label, col_label, value):
        self.degree = degree
        self.row_label = row_label
        self.col_label = col_label
        self.value = value
        super().__init__(
            f"boundary of boundary is nonzero: d_{degree} d_{degree + 1} has entry "
            f"{value} at ({row_label}, {col_label})"
        )


class UnknownLabel(HandleHomologyError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else "unknown label"


class DuplicateLabel(HandleHomologyError):
    pass


class SameHandle(HandleHomologyError):
    pass


class PivotNotUnit(HandleHomologyError):
    pass


class NotApplicable(HandleHomologyError):
    pass


class InvarianceViolation(HandleHomologyError):
    """A fuzzed move changed an invariant. ``journal`` reproduces the failure."""

    def __init__(self, message, journal):
        self.journal = journal
        super().__init__(message)


class ParseError(HandleHomologyError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class FormatSyntaxError(ParseError):
    """Malformed line in the decomposition text format."""


class SemanticError(ParseError):
    """Well-formed text describing an invalid decomposition."""
