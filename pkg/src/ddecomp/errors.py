"""Exception hierarchy shared by every stage of the pipeline."""


class DDecompError(Exception):
    """Base class for all errors raised by ddecomp."""


class DomainError(DDecompError, ValueError):
    """An operation was applied outside its mathematical domain."""


class ParseError(DDecompError, ValueError):
    """Malformed literal or input file.

    ``line`` and ``column`` are 1-based and may be ``None`` when the
    failing text did not come from a file.
    """

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)


class ShapeError(DDecompError, ValueError):
    """Matrix dimensions do not compose."""


class DegenerateFamilyError(DDecompError):
    """The family has an identically vanishing leading coefficient or a
    root pinned to z = 1 for every parameter value."""


class CommonFactorError(DDecompError):
    """Re P(jw, r, p) and Im P(jw, r, p) share a divisor depending on w.

    Without coprimality the resultant vanishes identically and the
    border is not a curve.
    """


class EndpointError(DDecompError, ValueError):
    """A Sturm-count endpoint is itself a root."""


class DegenerateSegmentError(DDecompError):
    """A segment lies entirely inside the border curve."""


class BorderContactError(DDecompError):
    """A sample point that should be off the border has a root on the
    stability boundary."""


class DegreeDropError(DDecompError):
    """The leading coefficient vanishes at a sample point."""


class BoundViolationError(DDecompError):
    """A computed region count exceeds a proven upper bound."""
