"""Classical (Schuetzenberger) jeu de taquin on pointed skew tableaux,
the 180-degree reversal conjugating it to its inverse, and the reduction
of a semi-standard tableau to a quasi-standard one.

A pointed skew tableau keeps the star as an actual cell: forward slides
start with the star at an inner corner of the vacated region and end with
it resting at an outer corner; shedding then removes the cell.  Columns may
have height 0 after a shed -- the bounding rectangle of an inverse slide
must survive until the final reversal.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .errors import ShapeError, TableauError, TaquinInvariantError
from .letters import sigma_letter_sl
from .tableaux import (
    Tableau,
    nqs_rows,
    shape_contains,
    skew_cells,
    weight_leq,
)

__all__ = [
    "SlSkewColumn",
    "SlSkewTableau",
    "expand_sl",
    "is_semistandard_skew_sl",
    "jdt_full",
    "jdt_inverse",
    "jdt_step",
    "jdt_to_rest",
    "reduce_sl",
    "render_state",
    "shed",
    "sigma_sl",
    "slide_pass_sl",
    "state_from_tableau",
    "state_to_json",
    "state_to_tableau",
    "trace_to_json",
]


@dataclass(frozen=True)
class SlSkewColumn:
    """inner vacated cells on top, then letters in row order, star optional."""

    inner: int
    letters: tuple[int, ...]
    star_row: int | None = None

    def __post_init__(self) -> None:
        if self.inner < 0:
            raise TableauError("negative inner height")
        if self.star_row is not None and not self.inner < self.star_row <= self.height:
            raise TableauError(f"star row {self.star_row} outside ({self.inner}, {self.height}]")

    @property
    def height(self) -> int:
        return self.inner + len(self.letters) + (self.star_row is not None)

    def letter_at(self, row: int) -> int | None:
        """Letter at a 1-based row; None for vacated or star cells."""
        if row <= self.inner or row > self.height or row == self.star_row:
            return None
        idx = row - self.inner - 1
        if self.star_row is not None and row > self.star_row:
            idx -= 1
        return self.letters[idx]

    def _letter_index(self, row: int) -> int:
        idx = row - self.inner - 1
        if self.star_row is not None and row > self.star_row:
            idx -= 1
        return idx

    def remove_star(self) -> "SlSkewColumn":
        return replace(self, star_row=None)

    def put_letter(self, row: int, value: int) -> "SlSkewColumn":
        """Replace the star cell at `row` by a letter."""
        if row != self.star_row:
            raise TableauError("can only put a letter onto the star cell")
        idx = row - self.inner - 1
        return SlSkewColumn(self.inner, self.letters[:idx] + (value,) + self.letters[idx:], None)

    def take_letter(self, row: int) -> tuple[int, "SlSkewColumn"]:
        """Remove the letter at `row`, leaving the star there."""
        if self.star_row is not None:
            raise TableauError("column already holds the star")
        idx = self._letter_index(row)
        value = self.letters[idx]
        return value, SlSkewColumn(self.inner, self.letters[:idx] + self.letters[idx + 1 :], row)


@dataclass(frozen=True)
class SlSkewTableau:
    n: int
    columns: tuple[SlSkewColumn, ...]

    def __post_init__(self) -> None:
        hs = self.heights
        for a, b in zip(hs, hs[1:]):
            if b > a:
                raise TableauError(f"outer heights {hs} not weakly decreasing")
        inn = self.inners
        for a, b in zip(inn, inn[1:]):
            if b > a:
                raise TableauError(f"inner heights {inn} not weakly decreasing")
        if sum(1 for c in self.columns if c.star_row is not None) > 1:
            raise TableauError("more than one star")

    @property
    def heights(self) -> tuple[int, ...]:
        return tuple(c.height for c in self.columns)

    @property
    def inners(self) -> tuple[int, ...]:
        return tuple(c.inner for c in self.columns)

    @property
    def star(self) -> tuple[int, int] | None:
        """(row, col), 1-based, or None."""
        for j, c in enumerate(self.columns):
            if c.star_row is not None:
                return (c.star_row, j + 1)
        return None

    def letter_at(self, row: int, col: int) -> int | None:
        if not 1 <= col <= len(self.columns):
            return None
        return self.columns[col - 1].letter_at(row)

    def replace_col(self, col: int, new: SlSkewColumn) -> "SlSkewTableau":
        cols = list(self.columns)
        cols[col - 1] = new
        return SlSkewTableau(self.n, tuple(cols))


def state_from_tableau(t: Tableau) -> SlSkewTableau:
    if t.kind != "sl":
        raise TableauError("expects a plain-letter tableau")
    return SlSkewTableau(t.n, tuple(SlSkewColumn(0, col) for col in t.columns))


def state_to_tableau(state: SlSkewTableau) -> Tableau:
    cols = []
    for c in state.columns:
        if c.star_row is not None or c.inner:
            raise TableauError("state still has vacated or star cells")
        if c.letters:
            cols.append(c.letters)
    return Tableau.sl(state.n, tuple(cols))


def is_semistandard_skew_sl(state: SlSkewTableau) -> bool:
    """Adjacent letter-filled cells satisfy the row/column conditions."""
    for j, col in enumerate(state.columns, start=1):
        for i in range(1, col.height):
            a, b = col.letter_at(i), col.letter_at(i + 1)
            if a is not None and b is not None and a >= b:
                return False
        if j < len(state.columns):
            for i in range(1, state.columns[j].height + 1):
                a, b = col.letter_at(i), state.columns[j].letter_at(i)
                if a is not None and b is not None and a > b:
                    return False
    return True


# ---------------------------------------------------------------------------
# slides


def _neighbours(state: SlSkewTableau, i: int, j: int) -> tuple[bool, bool]:
    cols = state.columns
    below = cols[j - 1].height >= i + 1
    right = j < len(cols) and cols[j].height >= i
    if right and cols[j].inner >= i:
        raise TableauError(f"star at ({i},{j}) is not at an inner corner")
    return below, right


def jdt_step(state: SlSkewTableau) -> SlSkewTableau | None:
    """One slide move; None when the star rests at an outer corner."""
    pos = state.star
    if pos is None:
        raise TableauError("no star to slide")
    i, j = pos
    below, right = _neighbours(state, i, j)
    if not below and not right:
        return None
    t_below = state.letter_at(i + 1, j) if below else None
    t_right = state.letter_at(i, j + 1) if right else None
    if right and (not below or t_below > t_right):
        value, new_right = state.columns[j].take_letter(i)
        out = state.replace_col(j, state.columns[j - 1].put_letter(i, value))
        return out.replace_col(j + 1, new_right)
    col = state.columns[j - 1]
    return state.replace_col(j, replace(col, star_row=i + 1))


def jdt_to_rest(state: SlSkewTableau) -> tuple[SlSkewTableau, list[tuple[int, int]]]:
    """Slide until the star rests; returns the state and the star's path."""
    path = [state.star]
    while True:
        nxt = jdt_step(state)
        if nxt is None:
            return state, path
        state = nxt
        path.append(state.star)


def shed(state: SlSkewTableau) -> SlSkewTableau:
    """Remove the resting star cell (keeps height-0 columns in place)."""
    pos = state.star
    if pos is None:
        raise TableauError("no star to shed")
    i, j = pos
    below, right = _neighbours(state, i, j)
    if below or right:
        raise TableauError("star is not resting at an outer corner")
    return state.replace_col(j, state.columns[j - 1].remove_star())


def jdt_full(state: SlSkewTableau) -> SlSkewTableau:
    rest, _ = jdt_to_rest(state)
    return shed(rest)


def render_state(state: SlSkewTableau) -> str:
    """ASCII layout of a skew state; vacated cells blank, the star a "*"."""
    from .tableaux import render_cells

    cols = []
    for c in state.columns:
        texts = [""] * c.inner
        for row in range(c.inner + 1, c.height + 1):
            letter = c.letter_at(row)
            texts.append("*" if row == c.star_row else str(letter))
        cols.append(texts)
    return render_cells(cols)


def state_to_json(state: SlSkewTableau) -> dict:
    """One snapshot: grids, vacated prefix heights, star coordinate."""
    cols = []
    for c in state.columns:
        rows: list = []
        for row in range(c.inner + 1, c.height + 1):
            rows.append(None if row == c.star_row else c.letter_at(row))
        cols.append(rows)
    star = state.star
    return {"columns": cols, "inner": list(state.inners), "star": list(star) if star else None}


def trace_to_json(states: list[SlSkewTableau]) -> list[dict]:
    return [state_to_json(s) for s in states]


def sigma_sl(state: SlSkewTableau) -> SlSkewTableau:
    """Rotate 180 degrees in the bounding rectangle and map entries by n+1-t."""
    if not state.columns:
        return state
    H = state.heights[0]
    n = state.n
    new_cols = []
    for old in reversed(state.columns):
        letters = tuple(sigma_letter_sl(t, n) for t in reversed(old.letters))
        star = None if old.star_row is None else H + 1 - old.star_row
        new_cols.append(SlSkewColumn(H - old.height, letters, star))
    return SlSkewTableau(n, tuple(new_cols))


def jdt_inverse(state: SlSkewTableau) -> SlSkewTableau:
    """Inverse slide: the reversal conjugate of the forward slide."""
    rest, _ = jdt_to_rest(sigma_sl(state))
    return sigma_sl(rest)


# ---------------------------------------------------------------------------
# reduction and expansion


def slide_pass_sl(t: Tableau, s: int) -> Tableau:
    """One reduction pass at row s: prepend a vacated trivial column, slide, strip."""
    if s not in nqs_rows(t.grid()):
        raise TableauError(f"tableau is quasi-standard at row {s}")
    hmax = t.n - 1
    col0 = SlSkewColumn(s - 1, tuple(range(s + 1, hmax + 1)), s)
    state = SlSkewTableau(t.n, (col0,) + tuple(SlSkewColumn(0, c) for c in t.columns))
    rest, path = jdt_to_rest(state)
    if any(i != s for i, _ in path):
        raise TaquinInvariantError(f"star left row {s}: path {path}")
    state = shed(rest)
    first = state.columns[0]
    if first.inner != s - 1 or first.letters != tuple(range(s, hmax + 1)):
        raise TaquinInvariantError(f"first column did not end trivial-with-{s - 1}-vacated")
    rest_cols = []
    for c in state.columns[1:]:
        if c.inner or c.star_row is not None:
            raise TaquinInvariantError("residual vacated or star cell after a pass")
        if c.letters:
            rest_cols.append(c.letters)
    return Tableau.sl(t.n, tuple(rest_cols))


def reduce_sl(t: Tableau) -> tuple[tuple[int, ...], Tableau]:
    """Iterate passes at the largest non-quasi-standard row; returns (shape, result)."""
    cur = t
    while True:
        rows = nqs_rows(cur.grid())
        if not rows:
            return cur.shape, cur
        cur = slide_pass_sl(cur, max(rows))


def _star_fill_order(lam: tuple[int, ...], mu: tuple[int, ...]) -> list[tuple[int, int]]:
    """Cells of lambda minus mu, bottom row first, right to left within a row."""
    return sorted(skew_cells(lam, mu), key=lambda ij: (-ij[0], -ij[1]))


def expand_sl(lam: tuple[int, ...], mu: tuple[int, ...], q: Tableau) -> Tableau:
    """Rebuild the semi-standard tableau of shape lambda reducing to (mu, q)."""
    hmax = q.n - 1
    if q.shape != tuple(mu):
        raise ShapeError(f"tableau shape {q.shape} is not {tuple(mu)}")
    if not shape_contains(tuple(mu), tuple(lam)):
        raise ShapeError(f"{tuple(mu)} is not contained in {tuple(lam)}")
    if not weight_leq(tuple(mu), tuple(lam), hmax):
        raise ShapeError(f"{tuple(mu)} is not below {tuple(lam)} in the weight order")
    lam, mu = tuple(lam), tuple(mu)
    if lam == mu:
        return q
    d = len(lam) - len(mu)
    fill = _star_fill_order(lam, mu)
    star_cells = {(i, j + d): k for k, (i, j) in enumerate(fill, start=1)}

    trivial = tuple(range(1, hmax + 1))
    heights = (hmax,) * d + lam
    H, W = hmax, len(heights)
    q_grid = q.grid()

    new_cols = []
    star_pos: dict[int, tuple[int, int]] = {}
    for jj in range(1, W + 1):
        oj = W + 1 - jj
        h_old = heights[oj - 1]
        if oj <= d:
            content: list[int | None] = list(trivial)
        else:
            qcol = q_grid[oj - d - 1] if oj - d <= len(q_grid) else ()
            content = list(qcol) + [None] * (h_old - len(qcol))
        letters = []
        stars_here = 0
        for r in range(h_old, 0, -1):
            if content[r - 1] is None:
                k = star_cells[(r, oj)]
                star_pos[k] = (H + 1 - r, jj)
                stars_here += 1
            else:
                letters.append(sigma_letter_sl(content[r - 1], q.n))
        new_cols.append(SlSkewColumn(H - h_old + stars_here, tuple(letters)))
    state = SlSkewTableau(q.n, tuple(new_cols))

    for k in range(len(fill), 0, -1):
        row, col = star_pos[k]
        c = state.columns[col - 1]
        if c.inner != row:
            raise TaquinInvariantError(f"star {k} at ({row},{col}) is not the bottom vacated cell")
        state = state.replace_col(col, SlSkewColumn(c.inner - 1, c.letters, row))
        rest, _ = jdt_to_rest(state)
        state = shed(rest)

    state = sigma_sl(state)
    out_cols = []
    for j, c in enumerate(state.columns, start=1):
        if c.star_row is not None:
            raise TaquinInvariantError("residual star after expansion")
        if j <= d:
            if c.letters != tuple(range(c.inner + 1, hmax + 1)):
                raise TaquinInvariantError(f"column {j} is not a trivial bottom: {c.letters}")
            continue
        if c.inner:
            raise TaquinInvariantError(f"vacated cells beyond the first {d} columns")
        if c.letters:
            out_cols.append(c.letters)
    return Tableau.sl(q.n, tuple(out_cols))
