"""Partitions, skew shapes and the shape transforms.

Partitions are plain tuples of positive integers in weakly decreasing order.
Cells are 0-based ``(row, column)`` pairs in English convention. A *box* is a
``(rows, cols)`` rectangle anchored at the origin; rotations are taken inside
a box, which defaults to the tight box ``(len(outer), outer[0])``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import ShapeError

Partition = tuple[int, ...]
Cell = tuple[int, int]
Box = tuple[int, int]

NUMBERINGS = ("row", "column", "reverse-row", "reverse-column")


def partition(parts: Iterable[int]) -> Partition:
    """Validate ``parts`` and return it in canonical form (no trailing zeros)."""
    p = tuple(map(int, parts))
    if any(map(int.__lt__, p, p[1:])):
        raise ShapeError(f"not weakly decreasing: {p}")
    if p and p[-1] < 0:
        raise ShapeError(f"negative part in {p}")
    end = len(p)
    while end and p[end - 1] == 0:
        end -= 1
    return p[:end]


def is_partition(parts: Sequence[int]) -> bool:
    return all(a >= b for a, b in zip(parts, parts[1:])) and all(x >= 0 for x in parts)


def part(p: Sequence[int], i: int) -> int:
    """``p[i]`` with zero padding."""
    return p[i] if 0 <= i < len(p) else 0


def conjugate(p: Sequence[int]) -> Partition:
    out: list[int] = []
    below = 0
    for i in range(len(p) - 1, -1, -1):
        out.extend([i + 1] * (p[i] - below))
        below = p[i]
    return tuple(out)


def complement(p: Sequence[int], rows: int, cols: int) -> Partition:
    """Complement of ``p`` inside the ``rows x cols`` rectangle."""
    p = partition(p)
    if len(p) > rows or (p and p[0] > cols):
        raise ShapeError(f"{p} does not fit in a {rows}x{cols} rectangle")
    return partition(cols - part(p, rows - 1 - i) for i in range(rows))


def contains(outer: Sequence[int], inner: Sequence[int]) -> bool:
    return len(inner) <= len(outer) and all(part(outer, i) >= x for i, x in enumerate(inner))


def parse_partition(text: str) -> Partition:
    """Parse ``"6,4,3"``; the empty string is the empty partition."""
    text = text.strip()
    if not text:
        return ()
    try:
        return partition(int(x) for x in text.split(","))
    except ValueError as exc:
        raise ShapeError(f"bad partition {text!r}: {exc}") from None


def format_partition(p: Sequence[int]) -> str:
    return ",".join(str(x) for x in p)


def partitions(n: int, max_part: int | None = None, max_len: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if max_len is None:
        max_len = n

    def rec(rest: int, cap: int, room: int) -> Iterator[Partition]:
        if rest == 0:
            yield ()
            return
        if room == 0:
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in rec(rest - first, first, room - 1):
                yield (first,) + tail

    yield from rec(n, max_part, max_len)


def subpartitions(p: Sequence[int]) -> Iterator[Partition]:
    """All partitions contained in ``p``."""
    p = tuple(p)

    def rec(i: int, cap: int) -> Iterator[Partition]:
        if i == len(p):
            yield ()
            return
        for x in range(min(cap, p[i]), -1, -1):
            if x == 0:
                yield ()
            else:
                for tail in rec(i + 1, x):
                    yield (x,) + tail

    yield from rec(0, p[0] if p else 0)


@dataclass(frozen=True)
class SkewShape:
    """The cells of ``outer`` that are not in ``inner``."""

    outer: Partition
    inner: Partition = ()

    def __post_init__(self):
        outer = partition(self.outer)
        inner = partition(self.inner)
        if not contains(outer, inner):
            raise ShapeError(f"{inner} is not contained in {outer}")
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)

    @classmethod
    def _trusted(cls, outer: Partition, inner: Partition) -> "SkewShape":
        """Build from canonical partitions already known to be nested."""
        s = object.__new__(cls)
        object.__setattr__(s, "outer", outer)
        object.__setattr__(s, "inner", inner)
        return s

    @property
    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)

    @property
    def nrows(self) -> int:
        return len(self.outer)

    @property
    def box(self) -> Box:
        return (len(self.outer), self.outer[0] if self.outer else 0)

    @property
    def is_normal(self) -> bool:
        return not self.inner

    def row_span(self, i: int) -> range:
        return range(part(self.inner, i), part(self.outer, i))

    def row_lengths(self) -> tuple[int, ...]:
        return tuple(self.outer[i] - part(self.inner, i) for i in range(self.nrows))

    def cells(self) -> Iterator[Cell]:
        """Cells row by row, left to right."""
        for i in range(self.nrows):
            for j in self.row_span(i):
                yield (i, j)

    def __contains__(self, cell: Cell) -> bool:
        i, j = cell
        return part(self.inner, i) <= j < part(self.outer, i)

    def inside_corners(self) -> list[Cell]:
        """Removable corners of the inner partition, top row first."""
        mu = self.inner
        return [(i, mu[i] - 1) for i in range(len(mu)) if mu[i] > part(mu, i + 1)]

    def outer_corners(self) -> list[Cell]:
        """Removable corners of the outer partition."""
        lam = self.outer
        return [(i, lam[i] - 1) for i in range(len(lam)) if lam[i] > part(lam, i + 1)]

    def addable_cells(self) -> list[Cell]:
        """Cells whose addition to ``outer`` gives a partition."""
        lam = self.outer
        cells = [(i, lam[i]) for i in range(len(lam)) if i == 0 or lam[i - 1] > lam[i]]
        cells.append((len(lam), 0))
        return cells

    def __str__(self) -> str:
        if not self.inner:
            return f"({format_partition(self.outer)})"
        return f"({format_partition(self.outer)})/({format_partition(self.inner)})"


def default_box(s: SkewShape, box: Box | None) -> Box:
    if box is None:
        return s.box
    rows, cols = box
    if s.nrows > rows or (s.outer and s.outer[0] > cols):
        raise ShapeError(f"{s} does not fit in box {box}")
    return (rows, cols)


def rotate_cell(cell: Cell, box: Box) -> Cell:
    rows, cols = box
    return (rows - 1 - cell[0], cols - 1 - cell[1])


def transpose_cell(cell: Cell) -> Cell:
    return (cell[1], cell[0])


def diamond_cell(cell: Cell, box: Box) -> Cell:
    rows, cols = box
    return (cols - 1 - cell[1], rows - 1 - cell[0])


def rotate_shape(s: SkewShape, box: Box | None = None) -> SkewShape:
    """180 degree rotation inside ``box``: ``lam/mu -> mu^c / lam^c``."""
    rows, cols = default_box(s, box)
    return SkewShape(complement(s.inner, rows, cols), complement(s.outer, rows, cols))


def transpose_shape(s: SkewShape) -> SkewShape:
    return SkewShape(conjugate(s.outer), conjugate(s.inner))


def diamond_shape(s: SkewShape, box: Box | None = None) -> SkewShape:
    """Rotation followed by transposition; the result lives in the transposed box."""
    rows, cols = default_box(s, box)
    # row j of the result is column cols-1-j of the rotated shape
    mu_t = conjugate(s.inner)
    lam_t = conjugate(s.outer)
    mu_t = (0,) * (cols - len(mu_t)) + mu_t[::-1]
    lam_t = (0,) * (cols - len(lam_t)) + lam_t[::-1]
    outer = [rows - x for x in mu_t]
    inner = [rows - x for x in lam_t]
    while outer and outer[-1] == 0:
        outer.pop()
    while inner and inner[-1] == 0:
        inner.pop()
    return SkewShape._trusted(tuple(outer), tuple(inner))


def numbering(s: SkewShape, variant: str = "row") -> list[Cell]:
    """Cells of ``s`` listed in label order for the given reading.

    ``row`` reads each row right to left, top row first. ``column`` reads
    each column top to bottom, rightmost column first. The ``reverse-``
    variants list the same cells backwards.
    """
    if variant not in NUMBERINGS:
        raise ValueError(f"unknown numbering {variant!r}")
    if variant.endswith("row"):
        order = [(i, j) for i in range(s.nrows) for j in reversed(s.row_span(i))]
    else:
        cols = s.outer[0] if s.outer else 0
        lam_t, mu_t = conjugate(s.outer), conjugate(s.inner)
        order = [(i, j) for j in reversed(range(cols)) for i in range(part(mu_t, j), part(lam_t, j))]
    if variant.startswith("reverse"):
        order.reverse()
    return order


def label_grid(s: SkewShape, variant: str = "row") -> dict[Cell, int]:
    """Map each cell to its 1-based label under ``numbering``."""
    return {cell: k + 1 for k, cell in enumerate(numbering(s, variant))}


def circ(nu: Sequence[int], mu: Sequence[int]) -> SkewShape:
    """The shape that stacks ``mu`` to the north-east of ``nu``.

    The first ``len(mu)`` rows hold ``mu`` shifted right by ``nu[0]``; below
    them sit the rows of ``nu`` flush left.
    """
    nu, mu = partition(nu), partition(mu)
    n1 = part(nu, 0)
    outer = tuple(n1 + x for x in mu) + nu
    inner = (n1,) * len(mu)
    return SkewShape(outer, inner)
