"""The contraction map on wedge basis vectors, the internal relations among
column functions as its transpose rows, and exact integer rank computations.

Wedge basis elements of degree k are strictly increasing tuples of letter
codes over the 2n-letter alphabet.  The symplectic form pairs e_l with
e_l-bar, so contracting a basis wedge keeps exactly the position pairs
(i < j) whose letters are a bar pair, with sign (-1)^(i+j-1); signs are
computed here once and the relations reuse them through the transpose, so
the two sides cannot drift apart.
"""

from __future__ import annotations

from itertools import combinations
from math import comb

from .errors import ShapeError

__all__ = [
    "contract",
    "contraction_matrix",
    "exact_rank",
    "internal_relations",
    "kernel_dimension",
    "relation_rank",
    "wedge_basis",
]

Wedge = tuple[int, ...]
FormalVector = dict[Wedge, int]


def wedge_basis(n: int, k: int) -> list[Wedge]:
    """All degree-k basis wedges over the rank-n alphabet, lexicographic."""
    if k < 0 or k > 2 * n:
        raise ShapeError(f"degree {k} outside [0, {2 * n}]")
    return list(combinations(range(1, 2 * n + 1), k))


def contract(w: Wedge, n: int) -> FormalVector:
    """Pair every unbarred/barred position pair out of w, with signs.

    Sum over positions i < j (1-based) whose letters pair under the
    symplectic form of (-1)^(i+j-1) times w with both positions removed.
    """
    if len(w) < 2:
        raise ShapeError("contraction needs degree at least 2")
    out: FormalVector = {}
    for i in range(len(w)):
        for j in range(i + 1, len(w)):
            if w[i] + w[j] != 2 * n + 1:
                continue
            target = w[:i] + w[i + 1 : j] + w[j + 1 :]
            sign = -1 if (i + j + 1) % 2 else 1  # (-1)^(i+j-1) with 1-based i, j
            coeff = out.get(target, 0) + sign
            if coeff:
                out[target] = coeff
            else:
                out.pop(target, None)
    return out


def internal_relations(n: int, k: int) -> list[FormalVector]:
    """One relation per degree-(k-2) basis wedge: the transpose row of the
    contraction matrix, i.e. the signed sum of the wedges obtained by
    inserting a bar pair."""
    if not 2 <= k <= n:
        raise ShapeError(f"degree {k} outside [2, {n}]")
    relations = []
    for e in wedge_basis(n, k - 2):
        rel: FormalVector = {}
        present = set(e)
        for m in range(1, n + 1):
            lo, hi = m, 2 * n + 1 - m
            if lo in present or hi in present:
                continue
            w = tuple(sorted(e + (lo, hi)))
            coeff = contract(w, n).get(e, 0)
            if coeff:
                rel[w] = coeff
        relations.append(rel)
    return relations


def contraction_matrix(n: int, k: int) -> list[list[int]]:
    """Rows indexed by degree-(k-2) wedges, columns by degree-k wedges."""
    if not 2 <= k <= n:
        raise ShapeError(f"degree {k} outside [2, {n}]")
    cols = {w: c for c, w in enumerate(wedge_basis(n, k))}
    rows = {e: r for r, e in enumerate(wedge_basis(n, k - 2))}
    mat = [[0] * len(cols) for _ in rows]
    for w, c in cols.items():
        for e, coeff in contract(w, n).items():
            mat[rows[e]][c] = coeff
    return mat


def exact_rank(matrix: list[list[int]]) -> int:
    """Rank over the rationals by fraction-free integer elimination."""
    m = [row[:] for row in matrix]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    row = 0
    for col in range(ncols):
        piv = next((r for r in range(row, nrows) if m[r][col]), None)
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        a = m[row][col]
        for r in range(row + 1, nrows):
            b = m[r][col]
            if b:
                m[r] = [a * x - b * y for x, y in zip(m[r], m[row])]
        rank += 1
        row += 1
        if row == nrows:
            break
    return rank


def relation_rank(n: int, k: int) -> int:
    return exact_rank(contraction_matrix(n, k))


def kernel_dimension(n: int, k: int) -> int:
    """Dimension of the kernel of the degree-k contraction."""
    return comb(2 * n, k) - relation_rank(n, k)
