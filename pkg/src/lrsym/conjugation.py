"""The conjugation symmetry map assembled from reversal, rotation and the fast diamond."""
from __future__ import annotations

from .crystal import reversal, reversal_general
from .errors import InvalidMatrixError, NotLRError, RemarkViolation
from .shapes import Box, default_box, diamond_shape, part, rotate_shape
from .switching import rho_bss, rho_whs  # noqa: F401  (re-exported aliases)
from .tableau import (
    RecordingMatrix,
    Tableau,
    blacklozenge_slow,
    from_recording_matrix,
    is_dual_lr,
    is_lr,
    recording_matrix,
    rotate,
)

ORDERS = ("e.bullet.diamond", "diamond.bullet.e", "bullet.diamond.e")


def is_lr_matrix(M: RecordingMatrix) -> bool:
    """Lattice test on the matrix: letters ``j+1`` up to row ``i`` never outnumber letters ``j`` above row ``i``."""
    a = M.dense()
    above = [0] * (M.ncols + 1)
    for row in a:
        for j in range(1, M.ncols):
            if above[j] + row[j] > above[j - 1]:
                return False
        for j, v in enumerate(row):
            above[j] += v
    return True


def rotate_matrix(M: RecordingMatrix, box: Box) -> RecordingMatrix:
    """Recording matrix of the rotated tableau: reverse rows and letters."""
    n, t = box[0], M.ncols
    entries = {(n - 1 - i, t - 1 - j): v for (i, j), v in M.entries.items()}
    return RecordingMatrix(rotate_shape(M.shape, box), entries, n, t)


def fast_blacklozenge(M: RecordingMatrix, box: Box | None = None, check: bool = True) -> RecordingMatrix:
    """Recording matrix of the diamond image, computed from ``M`` alone.

    ``M`` is the recording matrix of an LR tableau or of a dual LR tableau
    (handled by rotating to the LR side and back); ``box`` is the
    rectangle the diamond is taken in. The first pass builds cumulative row
    sums from the right, the second scatters each block of equal letters
    along a diagonal of the output. ``check`` verifies that consecutive
    blocks of one letter land on disjoint output rows.
    """
    box = default_box(M.shape, box)
    if M.nrows != box[0]:
        M = RecordingMatrix(M.shape, M.entries, box[0], M.ncols)
    if is_lr_matrix(M):
        return _fast_lr(M, box, check)
    flipped = rotate_matrix(M, box)
    if not is_lr_matrix(flipped):
        raise InvalidMatrixError("matrix is neither an LR nor a dual LR recording matrix")
    out = _fast_lr(flipped, box, check)
    return rotate_matrix(out, (box[1], box[0]))


def _fast_lr(M: RecordingMatrix, box: Box, check: bool) -> RecordingMatrix:
    n, width = box
    lam = M.shape.outer
    a = [[0] * n for _ in range(n)]
    for (i, j), v in M.entries.items():
        a[i][j] = v
    # cum[i][j]: letters >= j+1 in row i, plus the gap between row i and the box edge
    cum = [[0] * (n + 1) for _ in range(n)]
    for i in range(n):
        acc = width - part(lam, i)
        for j in range(i, -1, -1):
            acc += a[i][j]
            cum[i][j] = acc
    out: dict[tuple[int, int], int] = {}
    for i in range(n):
        c = 0
        for row in range(i, n):
            count = a[row][i]
            r = cum[row][i] - count
            if check and row + 1 < n and cum[row + 1][i] - cum[row][i] < a[row + 1][i]:
                raise RemarkViolation(f"blocks of letter {i + 1} overlap between rows {row} and {row + 1}")
            for k in range(count):
                key = (r + k, c + k)
                out[key] = out.get(key, 0) + 1
            c += count
    ncols = sum(a[row][0] for row in range(n))
    return RecordingMatrix(diamond_shape(M.shape, box), out, width, ncols)


def blacklozenge_fast(T: Tableau, box: Box | None = None) -> Tableau:
    """Tableau wrapper around ``fast_blacklozenge``."""
    box = default_box(T.shape, box)
    return from_recording_matrix(fast_blacklozenge(recording_matrix(T, box[0]), box))


def rho3(T: Tableau) -> Tableau:
    """Conjugation symmetry map: reversal, rotation, then the fast diamond.

    The rotation and the diamond share the box of ``T``'s outer shape, so
    together they transpose the shape exactly.
    """
    if not is_lr(T):
        raise NotLRError(f"rho3 needs an LR tableau, got {T}")
    box = T.shape.box
    rotated = rotate(reversal(T), box)
    return from_recording_matrix(fast_blacklozenge(recording_matrix(rotated, box[0]), box))


def _reverse_any(T: Tableau) -> Tableau:
    return reversal(T) if is_lr(T) else reversal_general(T)


def rho3_variants(T: Tableau, order: str = ORDERS[0]) -> Tableau:
    """``rho3`` computed along one of the three equivalent orders of the factors."""
    if not is_lr(T):
        raise NotLRError(f"rho3 needs an LR tableau, got {T}")
    box = T.shape.box
    tbox = (box[1], box[0])
    if order == "e.bullet.diamond":
        return blacklozenge_slow(rotate(reversal(T), box), box)
    if order == "diamond.bullet.e":
        return _reverse_any(rotate(blacklozenge_slow(T, box), tbox))
    if order == "bullet.diamond.e":
        return _reverse_any(blacklozenge_slow(rotate(T, box), box))
    raise ValueError(f"unknown order {order!r}; expected one of {ORDERS}")


def check_dual_input(T: Tableau) -> bool:
    return is_lr(T) or is_dual_lr(T)
