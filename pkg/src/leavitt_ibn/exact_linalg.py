"""Exact integer/rational linear algebra for the rank criterion.

Two elimination routes on purpose: rank works fraction-free on arbitrary
precision integers (one-step division-exact updates), solve_particular
works in reduced row-echelon form over Fraction.  Tests cross-check one
against an independent rational elimination; do not merge the routes.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple, Optional, Sequence

from .errors import DimensionMismatch, EmptyGraph, UnknownVertex
from .graph_core import Graph, canonical_order


class IntMatrix:
    """Row-major immutable integer matrix."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: tuple[int, ...]):
        if len(entries) != rows * cols:
            raise DimensionMismatch(
                f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(entries)}"
            )
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IntMatrix":
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        entries = []
        for row in rows:
            if len(row) != ncols:
                raise DimensionMismatch("ragged rows")
            entries.extend(int(x) for x in row)
        return cls(nrows, ncols, tuple(entries))

    def at(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def row_lists(self) -> list[list[int]]:
        c = self.cols
        return [list(self.entries[i * c : (i + 1) * c]) for i in range(self.rows)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(
            self.cols,
            self.rows,
            tuple(self.at(i, j) for j in range(self.cols) for i in range(self.rows)),
        )

    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        body = "; ".join(
            " ".join(str(self.at(i, j)) for j in range(self.cols)) for i in range(self.rows)
        )
        return f"IntMatrix[{body}]"


def incidence_matrix(g: Graph, order: Optional[Sequence[str]] = None) -> IntMatrix:
    """Entry (i, j) counts edges order[i] -> order[j]; sink rows are zero.
    Defaults to the graph's own vertex order."""
    if order is None:
        order = g.vertices
    pos = {v: i for i, v in enumerate(order)}
    if len(pos) != len(order) or set(pos) != set(g.vertices):
        raise UnknownVertex("order must be a permutation of the graph's vertices")
    h = len(order)
    a = [[0] * h for _ in range(h)]
    for e in g.edges:
        a[pos[e.src]][pos[e.dst]] += 1
    return IntMatrix(h, h, tuple(x for row in a for x in row))


class CriterionSystem(NamedTuple):
    matrix: IntMatrix  # transposed incidence minus the regular-diagonal
    rhs: tuple[int, ...]  # all ones
    z: int  # number of regular vertices
    order: tuple[str, ...]  # canonical vertex order (regular first)


def criterion_system(g: Graph) -> CriterionSystem:
    """Build M = A^t - J and b = (1,...,1) over the canonical order, where
    A is the incidence matrix and J has ones exactly on the first z
    diagonal entries (one relation per regular vertex)."""
    if not g.vertices:
        raise EmptyGraph("criterion system needs at least one vertex")
    order, z = canonical_order(g)
    pos = {v: i for i, v in enumerate(order)}
    h = len(order)
    a = [[0] * h for _ in range(h)]
    for e in g.edges:
        a[pos[e.dst]][pos[e.src]] += 1  # filled directly as the transpose
    for i in range(z):
        a[i][i] -= 1
    # sinks emit nothing and carry no relation, so their columns must vanish
    assert all(a[i][j] == 0 for j in range(z, h) for i in range(h))
    matrix = IntMatrix(h, h, tuple(x for row in a for x in row))
    return CriterionSystem(matrix, (1,) * h, z, order)


def _fraction_free_pivot_cols(a: list[list[int]], nrows: int, ncols: int) -> list[int]:
    """Eliminate in place with one-step fraction-free updates (divisions by
    the previous pivot are exact); returns pivot column indices.  Pivot
    rule: first nonzero scanning rows top-to-bottom, columns left-to-right."""
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = -1
        for i in range(r, nrows):
            if a[i][c]:
                p = i
                break
        if p < 0:
            continue
        if p != r:
            a[r], a[p] = a[p], a[r]
        row_r = a[r]
        piv = row_r[c]
        for i in range(r + 1, nrows):
            row_i = a[i]
            f = row_i[c]
            for j in range(c + 1, ncols):
                row_i[j] = (piv * row_i[j] - f * row_r[j]) // prev
            row_i[c] = 0
        prev = piv
        pivots.append(c)
        r += 1
    return pivots


def rank(m: IntMatrix) -> int:
    """Exact rank by fraction-free elimination on integers."""
    return len(_fraction_free_pivot_cols(m.row_lists(), m.rows, m.cols))


def augment(m: IntMatrix, rhs: Sequence[int]) -> IntMatrix:
    if len(rhs) != m.rows:
        raise DimensionMismatch("rhs length must equal row count")
    c = m.cols
    entries = []
    for i in range(m.rows):
        entries.extend(m.entries[i * c : (i + 1) * c])
        entries.append(int(rhs[i]))
    return IntMatrix(m.rows, c + 1, tuple(entries))


def augmented_ranks(m: IntMatrix, rhs: Sequence[int]) -> tuple[int, int]:
    """(rank of M, rank of [M | rhs]) from a single elimination: columns are
    processed left to right, so pivots landing before the last column are
    exactly the pivots of M alone."""
    if len(rhs) != m.rows:
        raise DimensionMismatch("rhs length must equal row count")
    c = m.cols
    a = [
        list(m.entries[i * c : (i + 1) * c]) + [int(rhs[i])]
        for i in range(m.rows)
    ]
    pivots = _fraction_free_pivot_cols(a, m.rows, c + 1)
    rank_aug = len(pivots)
    rank_m = sum(1 for p in pivots if p < c)
    return rank_m, rank_aug


def solve_particular(
    m: IntMatrix, rhs: Sequence[int]
) -> Optional[tuple[Fraction, ...]]:
    """One rational solution of M x = rhs with every free variable set to 0,
    or None when inconsistent.  Same pivot rule as rank()."""
    if len(rhs) != m.rows:
        raise DimensionMismatch("rhs length must equal row count")
    ncols = m.cols
    a = [
        [Fraction(m.at(i, j)) for j in range(ncols)] + [Fraction(int(rhs[i]))]
        for i in range(m.rows)
    ]
    nrows = len(a)
    pivots: list[tuple[int, int]] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = -1
        for i in range(r, nrows):
            if a[i][c]:
                p = i
                break
        if p < 0:
            continue
        if p != r:
            a[r], a[p] = a[p], a[r]
        piv = a[r][c]
        a[r] = [x / piv for x in a[r]]
        row_r = a[r]
        for i in range(nrows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], row_r)]
        pivots.append((r, c))
        r += 1
    for i in range(r, nrows):
        if a[i][ncols]:
            return None
    x = [Fraction(0)] * ncols
    for row, col in pivots:
        x[col] = a[row][ncols]
    return tuple(x)


def matrix_vector(m: IntMatrix, x: Sequence[Fraction]) -> tuple[Fraction, ...]:
    if len(x) != m.cols:
        raise DimensionMismatch("vector length must equal column count")
    c = m.cols
    out = []
    for i in range(m.rows):
        row = m.entries[i * c : (i + 1) * c]
        out.append(sum((e * xi for e, xi in zip(row, x)), Fraction(0)))
    return tuple(out)
