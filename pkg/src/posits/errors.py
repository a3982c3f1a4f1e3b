"""Exception types shared across the library."""


class PositError(Exception):
    """Base class for library-specific failures."""


class UnsupportedConfigError(PositError):
    """The requested operation is not available for this posit configuration."""


class QuireOverflowError(PositError):
    """A quire accumulation ran past its carry-guard bits."""


class MtxParseError(PositError):
    """Matrix Market input is malformed."""

    def __init__(self, message, line_no=None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


class MtxUnsupportedError(PositError):
    """Matrix Market input uses a qualifier this reader does not handle."""


class FactorizationError(PositError):
    """Incomplete factorization hit a structurally zero or exactly zero pivot."""

    def __init__(self, row):
        super().__init__(f"zero pivot in row {row}")
        self.row = row


class SolverDivergenceError(PositError):
    """An iterative solve produced a non-real iterate (NaR or NaN)."""

    def __init__(self, iteration):
        super().__init__(f"non-real iterate detected at iteration {iteration}")
        self.iteration = iteration
