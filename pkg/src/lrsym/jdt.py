"""Jeu de taquin: slides, rectification, anti-normal form and evacuation."""
from __future__ import annotations

import random

from .errors import NotCornerError, ShapeError
from .shapes import Cell, SkewShape, part
from .tableau import Tableau, rotate


def _contract(cells: dict[Cell, int], hole: Cell) -> Cell:
    """Slide the hole south-east through ``cells`` in place; return where it stops."""
    i, j = hole
    while True:
        s = cells.get((i + 1, j))
        e = cells.get((i, j + 1))
        if s is None and e is None:
            return (i, j)
        if e is None or (s is not None and s <= e):
            cells[(i, j)] = cells.pop((i + 1, j))
            i += 1
        else:
            cells[(i, j)] = cells.pop((i, j + 1))
            j += 1


def _expand(cells: dict[Cell, int], hole: Cell) -> Cell:
    """Slide the hole north-west; the larger neighbour moves, ties go north."""
    i, j = hole
    while True:
        n = cells.get((i - 1, j))
        w = cells.get((i, j - 1))
        if n is None and w is None:
            return (i, j)
        if w is None or (n is not None and n >= w):
            cells[(i, j)] = cells.pop((i - 1, j))
            i -= 1
        else:
            cells[(i, j)] = cells.pop((i, j - 1))
            j -= 1


def _bump(p: tuple[int, ...], i: int, delta: int) -> tuple[int, ...]:
    q = list(p) + [0] * max(0, i + 1 - len(p))
    q[i] += delta
    while q and q[-1] == 0:
        q.pop()
    return tuple(q)


def contracting_slide(T: Tableau, corner: Cell) -> tuple[Tableau, Cell]:
    """Slide into an inside corner; returns the new tableau and the vacated cell."""
    shape = T.shape
    if corner not in shape.inside_corners():
        raise NotCornerError(f"{corner} is not an inside corner of {shape}")
    cells = T.cells()
    end = _contract(cells, corner)
    new_shape = SkewShape(_bump(shape.outer, end[0], -1), _bump(shape.inner, corner[0], -1))
    return Tableau.from_cells(cells, new_shape, T.bound), end


def expanding_slide(T: Tableau, outside: Cell) -> tuple[Tableau, Cell]:
    """Inverse of ``contracting_slide``: start from an addable cell of the outer shape.

    The returned cell is the one added to the inner shape.
    """
    shape = T.shape
    if outside not in shape.addable_cells():
        raise NotCornerError(f"{outside} is not an outside corner of {shape}")
    i0 = outside[0]
    cells = T.cells()
    end = _expand(cells, outside)
    new_shape = SkewShape(_bump(shape.outer, i0, 1), _bump(shape.inner, end[0], 1))
    return Tableau.from_cells(cells, new_shape, T.bound), end


def rectify(T: Tableau, rng: random.Random | None = None) -> Tableau:
    """Slide into inside corners until the shape is normal.

    Without ``rng`` the corner in the topmost row is used each time; with it
    a random inside corner is chosen at every step.
    """
    outer, inner = list(T.outer), list(T.inner)
    cells = T.cells()
    while inner:
        corners = [i for i in range(len(inner)) if inner[i] > part(inner, i + 1)]
        i = rng.choice(corners) if rng is not None else corners[0]
        end = _contract(cells, (i, inner[i] - 1))
        inner[i] -= 1
        outer[end[0]] -= 1
        while inner and inner[-1] == 0:
            inner.pop()
    while outer and outer[-1] == 0:
        outer.pop()
    return Tableau.from_cells(cells, SkewShape(tuple(outer)), T.bound)


def anti_normal(T: Tableau) -> Tableau:
    """Expanding slides inside the tight rectangle until the outer shape fills it."""
    nrows, ncols = T.shape.box
    outer = list(T.outer) + [0] * (nrows - T.nrows)
    inner = list(T.inner) + [0] * (nrows - len(T.inner))
    cells = T.cells()
    while True:
        rows = [i for i in range(nrows) if outer[i] < ncols and (i == 0 or outer[i - 1] > outer[i])]
        if not rows:
            break
        i = rows[-1]
        end = _expand(cells, (i, outer[i]))
        outer[i] += 1
        inner[end[0]] += 1
    return Tableau.from_cells(cells, SkewShape(tuple(outer), tuple(inner)), T.bound)


def evacuate(P: Tableau) -> Tableau:
    """Schutzenberger involution on a normal shape: rectify the rotation."""
    if P.inner:
        raise ShapeError(f"evacuation needs a normal shape, got {P.shape}")
    return rectify(rotate(P))
