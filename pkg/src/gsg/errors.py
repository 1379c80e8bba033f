"""Exception types shared across the package.

The CLI maps these onto process exit codes, so user-facing operations
raise one of the classes below rather than bare ValueError/RuntimeError.
Plain OverflowError (builtin) is reserved for integers that do not fit
a requested digit width.
"""


class GsgError(Exception):
    """Base class for all errors raised by this package."""


class DigitBoundError(GsgError, ValueError):
    """A digit violates its positional bound 0 <= d_i <= m*(i+1)-1."""


class WindowParseError(GsgError, ValueError):
    """A window string entry is malformed; the message names the entry."""


class DimensionMismatch(GsgError, ValueError):
    """Two elements do not share the same (m, n)."""


class IndexOutOfRange(GsgError, IndexError):
    """A generator or inversion index is outside its valid range."""


class UnsupportedRadix(GsgError, ValueError):
    """The root system machinery requires m >= 2."""


class RankOutOfRange(GsgError, ValueError):
    """A rank is outside [1, m^n * n!]."""


class BudgetExceeded(GsgError, RuntimeError):
    """A whole-group sweep would visit more elements than the caller allowed."""


class DecompositionFailure(GsgError, RuntimeError):
    """The flag-generator decomposition lost uniqueness; indicates a bug."""
