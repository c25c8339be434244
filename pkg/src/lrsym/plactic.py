"""Burge (column) insertion and the Knuth / dual equivalence tests."""
from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass

from .errors import ShapeError
from .shapes import Cell
from .tableau import Tableau, row_word
from .words import Word


@dataclass(frozen=True)
class BurgePair:
    p: Tableau
    q: Tableau


def _insert(columns: list[list[int]], x: int) -> Cell:
    col = 0
    while True:
        if col == len(columns):
            columns.append([x])
            return (0, col)
        c = columns[col]
        k = bisect_left(c, x)
        if k == len(c):
            c.append(x)
            return (k, col)
        x, c[k] = c[k], x
        col += 1


def _columns(T: Tableau) -> list[list[int]]:
    if T.inner:
        raise ShapeError(f"column insertion needs a normal shape, got {T.shape}")
    ncols = T.outer[0] if T.outer else 0
    return [[r[j] for r in T.rows if len(r) > j] for j in range(ncols)]


def _from_columns(columns: list[list[int]], bound: int | None) -> Tableau:
    height = len(columns[0]) if columns else 0
    rows = [[c[i] for c in columns if len(c) > i] for i in range(height)]
    return Tableau.from_rows(rows, bound=bound)


def column_insert(P: Tableau, x: int) -> tuple[Tableau, Cell]:
    """Insert ``x`` into the first column, bumping the topmost entry ``>= x``.

    Bumped entries move on to the next column. Returns the new tableau and the
    cell that was added.
    """
    columns = _columns(P)
    cell = _insert(columns, x)
    return _from_columns(columns, max(P.bound, x)), cell


def burge(w: Word) -> BurgePair:
    columns: list[list[int]] = []
    q_cols: list[list[int]] = []
    for step, x in enumerate(w.letters, start=1):
        i, j = _insert(columns, x)
        if j == len(q_cols):
            q_cols.append([])
        q_cols[j].append(step)
        assert len(q_cols[j]) == i + 1
    return BurgePair(_from_columns(columns, w.bound), _from_columns(q_cols, len(w)))


def p_symbol(T: Tableau) -> Tableau:
    return burge(row_word(T)).p


def q_symbol(T: Tableau) -> Tableau:
    return burge(row_word(T)).q


def knuth_equivalent(a: Tableau, b: Tableau) -> bool:
    return p_symbol(a) == p_symbol(b)


def dual_equivalent(a: Tableau, b: Tableau) -> bool:
    if a.shape != b.shape:
        raise ShapeError(f"dual equivalence compares equal shapes, got {a.shape} and {b.shape}")
    return q_symbol(a) == q_symbol(b)
