"""Symplectic columns: admissibility, doubling, recovery, splitting, surgery.

A column is a pair of subsets (A, D) of [1, n]: the unbarred letters A read
top-down ascending, then the barred letters D' read top-down descending in
magnitude.  Writing I = A cap D, the column is admissible when the witness
set J (same size as I, element-wise dominating, lexicographically smallest
inside the complement of A cup D) exists; then

    B = (A \\ I) cup J,      C = (D \\ I) cup J,

and the double of the column is the two-column pair (A over C' | B over D').
Conversely (B, C) determines (A, D): J = B cap C and I is the largest
dominated set in the complement, taken inside [0, n] -- magnitude 0 is the
boundary extension that slides may touch, anything below 0 is an error.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import ColumnError, GBoundaryError, InadmissibleColumnError

__all__ = [
    "ColumnWindow",
    "DoubledColumn",
    "SymplecticColumn",
    "dble",
    "dble_sets",
    "g_from",
    "is_admissible",
    "split_column",
    "surgery_add_B",
    "surgery_add_D",
    "surgery_remove_A",
    "surgery_remove_C",
]


def _check_subsets(A: frozenset[int], D: frozenset[int], lo: int, hi: int) -> None:
    for name, S in (("A", A), ("D", D)):
        for x in S:
            if not lo <= x <= hi:
                raise ColumnError(f"{name} contains {x}, outside [{lo}, {hi}]")


@dataclass(frozen=True)
class SymplecticColumn:
    """Column content (A, D) for rank n; magnitude 0 only inside slides."""

    n: int
    A: frozenset[int]
    D: frozenset[int]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ColumnError(f"rank must be positive, got {self.n}")
        object.__setattr__(self, "A", frozenset(self.A))
        object.__setattr__(self, "D", frozenset(self.D))
        _check_subsets(self.A, self.D, 0, self.n)
        if self.height > self.n + 1:
            raise ColumnError(f"column holds {self.height} letters, rank is {self.n}")

    @property
    def height(self) -> int:
        return len(self.A) + len(self.D)

    @property
    def I(self) -> frozenset[int]:
        return self.A & self.D

    def is_standard(self) -> bool:
        """True when no extended letter 0 appears and the height fits the rank."""
        return 0 not in self.A and 0 not in self.D and self.height <= self.n

    def codes(self) -> tuple[int, ...]:
        """Visible letters as codes, top-down (strictly increasing)."""
        bar = 2 * self.n + 1
        return tuple(sorted(self.A) + sorted(bar - d for d in self.D))

    def __str__(self) -> str:
        from .letters import format_letter, from_code

        return "[" + ",".join(format_letter(from_code(c, self.n)) for c in self.codes()) + "]"


def _smallest_dominating(I: list[int], pool: list[int]) -> list[int] | None:
    """Lexicographically smallest J in pool (sorted) with I[k] < J[k] for all k."""
    out: list[int] = []
    idx = 0
    prev = -1
    for i in I:
        lo = max(i, prev)
        while idx < len(pool) and pool[idx] <= lo:
            idx += 1
        if idx == len(pool):
            return None
        out.append(pool[idx])
        prev = pool[idx]
        idx += 1
    return out


def _largest_dominated(J: list[int], pool: list[int]) -> list[int] | None:
    """Lexicographically largest I in pool (sorted) with I[k] < J[k] for all k."""
    out: list[int] = []
    rev = sorted(pool, reverse=True)
    idx = 0
    prev: int | None = None
    for j in reversed(J):
        hi = j if prev is None else min(j, prev)
        while idx < len(rev) and rev[idx] >= hi:
            idx += 1
        if idx == len(rev):
            return None
        out.append(rev[idx])
        prev = rev[idx]
        idx += 1
    out.reverse()
    return out


@lru_cache(maxsize=None)
def _dble_sets_window(
    A: frozenset[int], D: frozenset[int], lo: int, hi: int
) -> tuple[frozenset[int], frozenset[int], frozenset[int], frozenset[int]] | None:
    """(I, J, B, C) for the column (A, D) on the index window [lo, hi], or None."""
    I = sorted(A & D)
    pool = [x for x in range(max(lo, 1), hi + 1) if x not in A and x not in D]
    J = _smallest_dominating(I, pool)
    if J is None:
        return None
    Jf = frozenset(J)
    return frozenset(I), Jf, (A - frozenset(I)) | Jf, (D - frozenset(I)) | Jf


def dble_sets(
    col: SymplecticColumn,
) -> tuple[frozenset[int], frozenset[int], frozenset[int], frozenset[int]]:
    """(I, J, B, C) of an admissible column; raises if inadmissible."""
    res = _dble_sets_window(col.A, col.D, 0, col.n)
    if res is None:
        raise InadmissibleColumnError(f"column {col} is not admissible for rank {col.n}")
    return res


def is_admissible(col: SymplecticColumn) -> bool:
    """Staircase condition: the witness set J exists."""
    return _dble_sets_window(col.A, col.D, 0, col.n) is not None


@dataclass(frozen=True)
class DoubledColumn:
    n: int
    A: frozenset[int]
    D: frozenset[int]
    I: frozenset[int]
    J: frozenset[int]
    B: frozenset[int]
    C: frozenset[int]

    def left_codes(self) -> tuple[int, ...]:
        """The column A over C', top-down."""
        return SymplecticColumn(self.n, self.A, self.C).codes()

    def right_codes(self) -> tuple[int, ...]:
        """The column B over D', top-down."""
        return SymplecticColumn(self.n, self.B, self.D).codes()


def dble(col: SymplecticColumn) -> DoubledColumn:
    I, J, B, C = dble_sets(col)
    return DoubledColumn(col.n, col.A, col.D, I, J, B, C)


def g_from(B, C, n: int) -> SymplecticColumn:
    """Recover the column (A, D) whose double has the given (B, C).

    I is the largest dominated partner of J = B cap C inside the complement
    of B cup C, taken in [0, n]; needing an index below 0 raises
    GBoundaryError (the boundary never reached by the reduction pipelines).
    """
    B, C = frozenset(B), frozenset(C)
    _check_subsets(B, C, 0, n)
    J = sorted(B & C)
    pool = [x for x in range(0, n + 1) if x not in B and x not in C]
    I = _largest_dominated(J, pool)
    if I is None:
        raise GBoundaryError(f"no dominated partner of J={J} in [0,{n}] outside B∪C")
    If = frozenset(I)
    return SymplecticColumn(n, (B - frozenset(J)) | If, (C - frozenset(J)) | If)


@dataclass(frozen=True)
class ColumnWindow:
    """A column over the index window [lo, hi] (both ends inclusive)."""

    lo: int
    hi: int
    A: frozenset[int]
    D: frozenset[int]

    def dble_sets(self):
        res = _dble_sets_window(self.A, self.D, self.lo, self.hi)
        if res is None:
            raise InadmissibleColumnError(
                f"window column A={sorted(self.A)}, D={sorted(self.D)} "
                f"not admissible on [{self.lo}, {self.hi}]"
            )
        return res


def split_column(
    col: SymplecticColumn, alpha: int, mode: str = "at_most"
) -> tuple[ColumnWindow, ColumnWindow]:
    """Split (A, D) at alpha into a low and a high window column.

    mode "at_most" cuts into [1, alpha] and [alpha+1, n]; mode "below" into
    [1, alpha-1] and [alpha, n].  The split is only legal at the windows
    where doubling commutes with it; any other alpha raises ColumnError.
    """
    if mode == "at_most":
        cut = alpha
    elif mode == "below":
        cut = alpha - 1
    else:
        raise ValueError(f"unknown split mode {mode!r}")
    low = ColumnWindow(1, cut, frozenset(x for x in col.A if x <= cut), frozenset(x for x in col.D if x <= cut))
    high = ColumnWindow(
        cut + 1, col.n, frozenset(x for x in col.A if x > cut), frozenset(x for x in col.D if x > cut)
    )
    _, _, B, C = dble_sets(col)
    try:
        _, _, Blo, Clo = low.dble_sets()
        _, _, Bhi, Chi = high.dble_sets()
    except InadmissibleColumnError as exc:
        raise ColumnError(f"split of {col} at {alpha} ({mode}) is not legal: {exc}") from exc
    if Blo != frozenset(x for x in B if x <= cut) or Clo != frozenset(x for x in C if x <= cut):
        raise ColumnError(f"split of {col} at {alpha} ({mode}): doubling does not commute (low part)")
    if Bhi != frozenset(x for x in B if x > cut) or Chi != frozenset(x for x in C if x > cut):
        raise ColumnError(f"split of {col} at {alpha} ({mode}): doubling does not commute (high part)")
    return low, high


def surgery_add_B(col: SymplecticColumn, u: int) -> SymplecticColumn:
    """Insert u into the B-side and recompute (A, D)."""
    _, _, B, C = dble_sets(col)
    if u in B:
        raise ColumnError(f"{u} already in B = {sorted(B)}")
    return g_from(B | {u}, C, col.n)


def surgery_add_D(col: SymplecticColumn, v: int) -> SymplecticColumn:
    """Insert v into D."""
    if v in col.D:
        raise ColumnError(f"{v} already in D = {sorted(col.D)}")
    return SymplecticColumn(col.n, col.A, col.D | {v})


def surgery_remove_A(col: SymplecticColumn, a: int) -> SymplecticColumn:
    """Delete a from A."""
    if a not in col.A:
        raise ColumnError(f"{a} not in A = {sorted(col.A)}")
    return SymplecticColumn(col.n, col.A - {a}, col.D)


def surgery_remove_C(col: SymplecticColumn, c: int) -> SymplecticColumn:
    """Delete c from the C-side and recompute (A, D)."""
    _, _, B, C = dble_sets(col)
    if c not in C:
        raise ColumnError(f"{c} not in C = {sorted(C)}")
    return g_from(B, C - {c}, col.n)
