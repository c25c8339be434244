"""Skew tableaux, readings, recording matrices and the basic bijections."""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import (
    CFViolation,
    InvalidMatrixError,
    InvalidTableauError,
    NotLRError,
    NotStandardError,
    NotYamanouchiError,
    ShapeError,
)
from .shapes import (
    Box,
    Cell,
    Partition,
    SkewShape,
    circ,
    default_box,
    diamond_cell,
    numbering,
    part,
    partition,
    rotate_cell,
    rotate_shape,
    diamond_shape,
    transpose_shape,
)
from .words import Word, diamond, is_yamanouchi, dualize


@dataclass(frozen=True)
class Tableau:
    """A semistandard filling of ``outer/inner``.

    ``rows[i]`` holds the letters of row ``i`` from left to right, starting at
    column ``inner[i]``. Rows weakly increase, columns strictly increase.
    ``bound`` is the alphabet size used by dualizing operations; it does not
    take part in equality.
    """

    outer: Partition
    inner: Partition
    rows: tuple[tuple[int, ...], ...]
    bound: int | None = field(default=None, compare=False)

    def __post_init__(self):
        shape = SkewShape(self.outer, self.inner)
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        if len(rows) != shape.nrows:
            raise InvalidTableauError(f"{len(rows)} rows given for shape {shape}")
        for i, r in enumerate(rows):
            if len(r) != shape.outer[i] - part(shape.inner, i):
                raise InvalidTableauError(f"row {i} has {len(r)} entries, shape {shape} needs "
                                          f"{shape.outer[i] - part(shape.inner, i)}")
            if any(x < 1 for x in r):
                raise InvalidTableauError(f"non-positive entry in row {i}")
            if any(a > b for a, b in zip(r, r[1:])):
                raise InvalidTableauError(f"row {i} is not weakly increasing: {r}")
        for i in range(1, len(rows)):
            above, below = rows[i - 1], rows[i]
            off_a, off_b = part(shape.inner, i - 1), part(shape.inner, i)
            for j in range(max(off_a, off_b), off_b + len(below)):
                if j - off_a < len(above) and above[j - off_a] >= below[j - off_b]:
                    raise InvalidTableauError(f"column {j} is not strictly increasing at row {i}")
        top = max((x for r in rows for x in r), default=0)
        bound = top if self.bound is None else int(self.bound)
        if bound < top:
            raise InvalidTableauError(f"bound {bound} is smaller than entry {top}")
        object.__setattr__(self, "outer", shape.outer)
        object.__setattr__(self, "inner", shape.inner)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "bound", bound)

    # construction -------------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], inner: Sequence[int] = (), bound: int | None = None) -> "Tableau":
        rows = [tuple(r) for r in rows]
        inner = list(inner) + [0] * max(0, len(rows) - len(inner))
        outer = [inner[i] + (len(rows[i]) if i < len(rows) else 0) for i in range(len(inner))]
        while outer and outer[-1] == 0:
            outer.pop()
        return cls(tuple(outer), partition(inner), tuple(rows[: len(outer)]) + ((),) * (len(outer) - len(rows)), bound)

    @classmethod
    def from_cells(cls, cells: Mapping[Cell, int], shape: SkewShape, bound: int | None = None) -> "Tableau":
        try:
            rows = tuple(tuple(cells[(i, j)] for j in shape.row_span(i)) for i in range(shape.nrows))
        except KeyError as exc:
            raise InvalidTableauError(f"cell {exc.args[0]} of {shape} is not filled") from None
        if len(cells) != shape.size:
            raise InvalidTableauError(f"{len(cells)} cells given for a shape of size {shape.size}")
        return cls(shape.outer, shape.inner, rows, bound)

    @classmethod
    def parse(cls, text: str, bound: int | None = None) -> "Tableau":
        """Read the compact text form used by ``str``.

        Rows are separated by ``/``; ``.`` marks a cell of the inner shape.
        A row containing spaces or commas is split on them, otherwise every
        character is one token: ``"..1111/.122/233"`` or ``". . 6/2 7 10"``.
        """
        text = text.strip()
        rows, inner = [], []
        for chunk in text.split("/") if text else []:
            chunk = chunk.strip()
            tokens = re.split(r"[\s,]+", chunk) if re.search(r"[\s,]", chunk) else list(chunk)
            tokens = [t for t in tokens if t]
            skip = 0
            while skip < len(tokens) and tokens[skip] in (".", "~"):
                skip += 1
            inner.append(skip)
            rows.append([int(t) for t in tokens[skip:]])
        return cls.from_rows(rows, inner, bound)

    @classmethod
    def empty(cls, inner: Sequence[int] = ()) -> "Tableau":
        inner = partition(inner)
        return cls(inner, inner, ((),) * len(inner))

    # views --------------------------------------------------------------

    @property
    def shape(self) -> SkewShape:
        return SkewShape(self.outer, self.inner)

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    @property
    def nrows(self) -> int:
        return len(self.outer)

    @property
    def weight(self) -> tuple[int, ...]:
        counts = [0] * self.bound
        for r in self.rows:
            for x in r:
                counts[x - 1] += 1
        return tuple(counts)

    def __getitem__(self, cell: Cell) -> int:
        i, j = cell
        return self.rows[i][j - part(self.inner, i)]

    def cells(self) -> dict[Cell, int]:
        return {(i, part(self.inner, i) + k): x for i, r in enumerate(self.rows) for k, x in enumerate(r)}

    def with_bound(self, bound: int) -> "Tableau":
        return Tableau(self.outer, self.inner, self.rows, bound)

    def __str__(self) -> str:
        wide = self.bound > 9
        out = []
        for i, r in enumerate(self.rows):
            tokens = ["."] * part(self.inner, i) + [str(x) for x in r]
            out.append((" " if wide else "").join(tokens))
        return "/".join(out)


def fill(shape: SkewShape, letters: Sequence[int], variant: str = "row", bound: int | None = None) -> Tableau:
    """Place ``letters`` into ``shape`` following the given numbering."""
    cells = numbering(shape, variant)
    if len(cells) != len(letters):
        raise InvalidTableauError(f"{len(letters)} letters for a shape of size {len(cells)}")
    return Tableau.from_cells(dict(zip(cells, letters)), shape, bound)


def row_word(T: Tableau) -> Word:
    return Word(tuple(x for r in T.rows for x in reversed(r)), T.bound)


def column_word(T: Tableau) -> Word:
    return Word(tuple(T[c] for c in numbering(T.shape, "column")), T.bound)


def is_standard(T: Tableau) -> bool:
    return sorted(x for r in T.rows for x in r) == list(range(1, T.size + 1))


def standardize(T: Tableau) -> Tableau:
    """Relabel so that the ``i``-block is numbered west to east after all smaller blocks."""
    cells = T.cells()
    order = sorted(cells, key=lambda c: (cells[c], c[1]))
    for a, b in zip(order, order[1:]):
        # column strictness rules out two equal letters in one column
        assert not (cells[a] == cells[b] and a[1] == b[1])
    labels = {c: k + 1 for k, c in enumerate(order)}
    return Tableau.from_cells(labels, T.shape, T.size)


def transpose_standard(S: Tableau) -> Tableau:
    if not is_standard(S):
        raise NotStandardError("transposition is only defined on standard tableaux")
    cells = {(j, i): x for (i, j), x in S.cells().items()}
    return Tableau.from_cells(cells, transpose_shape(S.shape), S.bound)


def rotate(T: Tableau, box: Box | None = None) -> Tableau:
    """Rotate by 180 degrees inside ``box`` and replace each ``i`` by ``bound - i + 1``."""
    box = default_box(T.shape, box)
    t = T.bound
    cells = {rotate_cell(c, box): t + 1 - x for c, x in T.cells().items()}
    return Tableau.from_cells(cells, rotate_shape(T.shape, box), t)


def is_lr(T: Tableau) -> bool:
    return is_yamanouchi(row_word(T).letters)


def is_dual_lr(T: Tableau) -> bool:
    return is_yamanouchi(dualize(row_word(T)).letters)


def yamanouchi_tableau(nu: Sequence[int]) -> Tableau:
    nu = partition(nu)
    return Tableau(nu, (), tuple((i + 1,) * x for i, x in enumerate(nu)))


def lr_weight(T: Tableau) -> Partition:
    """Weight of an LR tableau as a partition."""
    if not is_lr(T):
        raise NotLRError(str(T))
    return partition(T.weight)


def blacklozenge_slow(T: Tableau, box: Box | None = None) -> Tableau:
    """Replace the row word by its diamond image, then rotate and transpose.

    Works on LR and dual LR tableaux. The result has shape
    ``diamond_shape(T.shape, box)`` and column word ``diamond(row_word(T))``.
    """
    box = default_box(T.shape, box)
    w = row_word(T)
    try:
        d = diamond(w)
    except NotYamanouchiError:
        raise NotYamanouchiError(f"row word {w} of {T} is neither Yamanouchi nor dual Yamanouchi") from None
    cells = {diamond_cell(c, box): x for c, x in zip(numbering(T.shape, "row"), d.letters)}
    return Tableau.from_cells(cells, diamond_shape(T.shape, box), d.bound)


@dataclass(frozen=True)
class RecordingMatrix:
    """Row-by-letter multiplicities of a tableau, stored sparsely.

    ``entries[(i, j)]`` is the number of letters ``j + 1`` in row ``i``; zero
    entries are absent. ``nrows`` may exceed the number of rows of ``shape``
    when the tableau sits in a taller box.
    """

    shape: SkewShape
    entries: Mapping[tuple[int, int], int]
    nrows: int
    ncols: int

    def __post_init__(self):
        if self.nrows < self.shape.nrows:
            raise InvalidMatrixError(f"{self.nrows} rows cannot hold shape {self.shape}")
        sums = [0] * self.nrows
        for (i, j), v in self.entries.items():
            if not (0 <= i < self.nrows and 0 <= j < self.ncols) or v < 0:
                raise InvalidMatrixError(f"bad entry {v} at {(i, j)}")
            sums[i] += v
        lengths = self.shape.row_lengths() + (0,) * (self.nrows - self.shape.nrows)
        if tuple(sums) != lengths:
            raise InvalidMatrixError(f"row sums {sums} do not match shape {self.shape}")

    @classmethod
    def from_dense(cls, rows: Sequence[Sequence[int]], shape: SkewShape) -> "RecordingMatrix":
        entries = {(i, j): int(v) for i, r in enumerate(rows) for j, v in enumerate(r) if v}
        ncols = max((len(r) for r in rows), default=0)
        return cls(shape, entries, len(rows), ncols)

    def dense(self) -> list[list[int]]:
        out = [[0] * self.ncols for _ in range(self.nrows)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    def to_array(self):
        import numpy as np

        a = np.zeros((self.nrows, self.ncols), dtype=np.int64)
        for (i, j), v in self.entries.items():
            a[i, j] = v
        return a

    def transpose(self, shape: SkewShape) -> "RecordingMatrix":
        return RecordingMatrix(shape, {(j, i): v for (i, j), v in self.entries.items()}, self.ncols, self.nrows)


def recording_matrix(T: Tableau, nrows: int | None = None) -> RecordingMatrix:
    nrows = T.nrows if nrows is None else nrows
    entries: dict[tuple[int, int], int] = {}
    for i, r in enumerate(T.rows):
        for x in r:
            entries[(i, x - 1)] = entries.get((i, x - 1), 0) + 1
    return RecordingMatrix(T.shape, entries, nrows, T.bound)


def from_recording_matrix(M: RecordingMatrix) -> Tableau:
    by_row: list[list[tuple[int, int]]] = [[] for _ in range(M.shape.nrows)]
    for (i, j), v in M.entries.items():
        if v:
            if i >= M.shape.nrows:
                raise InvalidMatrixError(f"entry in row {i} outside shape {M.shape}")
            by_row[i].append((j, v))
    rows = []
    for r in by_row:
        r.sort()
        rows.append(tuple(x for j, v in r for x in (j + 1,) * v))
    try:
        return Tableau(M.shape.outer, M.shape.inner, tuple(rows), M.ncols)
    except InvalidTableauError as exc:
        raise InvalidMatrixError(f"matrix does not describe a tableau: {exc}") from None


def tau(T: Tableau, rows: int | None = None) -> Tableau:
    """Normal-shape tableau whose recording matrix is the transpose of ``T``'s.

    ``rows`` sets the alphabet bound of the result (default: rows of ``T``).
    """
    if not is_lr(T):
        raise NotLRError(f"tau needs an LR tableau, got {T}")
    nu = partition(T.weight)
    bound = T.nrows if rows is None else rows
    M = recording_matrix(T, bound)
    return from_recording_matrix(M.transpose(SkewShape(nu)))


def tau_inv(B: Tableau, mu: Sequence[int]) -> Tableau:
    """Inverse of ``tau``: rebuild the LR tableau of shape ``(mu + weight(B))/mu``."""
    if B.inner:
        raise ShapeError(f"tau_inv needs a normal shape, got {B.shape}")
    mu = partition(mu)
    if not cf_member(B, mu):
        raise CFViolation(f"{B} with inner shape {mu} is not in the CF set")
    m = B.weight
    n = max(len(mu), len(m))
    lam = partition(part(mu, i) + part(m, i) for i in range(n))
    M = RecordingMatrix(SkewShape(lam, mu), {(j, i): v for (i, j), v in recording_matrix(B).entries.items()},
                        max(n, len(lam)), B.nrows)
    return from_recording_matrix(M).with_bound(B.nrows)


def cf_member(B: Tableau, mu: Sequence[int]) -> bool:
    """Does ``B`` glued below-left of ``Y(mu)`` form an LR tableau?"""
    if B.inner:
        raise ShapeError(f"cf_member needs a normal shape, got {B.shape}")
    mu = partition(mu)
    m = B.weight
    n = max(len(mu), len(m))
    if not all(part(mu, i) + part(m, i) >= part(mu, i + 1) + part(m, i + 1) for i in range(n)):
        return False
    shape = circ(B.outer, mu)
    rows = [(i + 1,) * x for i, x in enumerate(mu)] + list(B.rows)
    try:
        glued = Tableau(shape.outer, shape.inner, tuple(rows))
    except InvalidTableauError:
        return False
    return is_lr(glued)


# JSON ----------------------------------------------------------------------

def tableau_to_json(T: Tableau) -> dict:
    obj = {"outer": list(T.outer), "inner": list(T.inner), "rows": [list(r) for r in T.rows]}
    if T.bound != max((x for r in T.rows for x in r), default=0):
        obj["bound"] = T.bound
    return obj


def tableau_from_json(obj: Mapping) -> Tableau:
    """Accepts ``rows`` or ``recording``; ``inner`` may be omitted."""
    try:
        inner = partition(obj.get("inner", ()))
        bound = obj.get("bound")
        if "rows" in obj:
            rows = obj["rows"]
            if "outer" in obj:
                return Tableau(partition(obj["outer"]), inner, tuple(tuple(r) for r in rows), bound)
            return Tableau.from_rows(rows, inner, bound)
        if "recording" in obj:
            rec = obj["recording"]
            M = RecordingMatrix.from_dense(rec, SkewShape(partition(obj["outer"]), inner))
            T = from_recording_matrix(M)
            return T if bound is None else T.with_bound(bound)
    except (TypeError, KeyError) as exc:
        raise InvalidTableauError(f"malformed tableau object: {exc}") from None
    raise InvalidTableauError("tableau object needs 'rows' or 'recording'")
