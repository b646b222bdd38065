"""Exception hierarchy."""


class SptabError(Exception):
    """Base class for all library errors."""


class LetterError(SptabError, ValueError):
    """Letter outside the alphabet for the given rank."""


class ColumnError(SptabError, ValueError):
    """Malformed column data (sets not within the index range, etc.)."""


class InadmissibleColumnError(ColumnError):
    """Column fails the admissibility (staircase) condition, so it cannot be doubled."""


class GBoundaryError(ColumnError):
    """Recovering (A, D) from (B, C) would need an index below 0.

    The extended domain for the recovery stops at 0; anything below is a
    hard error (it cannot occur in the reduction pipelines).
    """


class ShapeError(SptabError, ValueError):
    """Invalid shape, or a shape pair violating a containment precondition."""


class TableauError(SptabError, ValueError):
    """Malformed tableau (ragged grid, bad heights, inadmissible column...)."""


class ParseError(SptabError, ValueError):
    """Unreadable textual or JSON input."""


class TaquinInvariantError(SptabError, RuntimeError):
    """A slide violated an invariant that is guaranteed by theory.

    Raised when a reduction pass sees the star leave its row, a 0 appear,
    or the vacated first column end up non-trivial.  This is a bug trap,
    not a recoverable condition; the CLI maps it to a distinct exit code.
    """
