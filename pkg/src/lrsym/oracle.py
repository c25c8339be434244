"""Brute-force LR enumeration and the symmetry counts built on it."""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Iterator, Sequence

from .errors import ArityError
from .shapes import Partition, SkewShape, conjugate, contains, diamond_shape, part, partition, partitions, subpartitions
from .tableau import Tableau, blacklozenge_slow, fill, row_word

DEFAULT_MAX_CELLS = 10
DEFAULT_MAX_LEN = 5
DEFAULT_MAX_PART = 6


def _check_triple(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> tuple[Partition, Partition, Partition]:
    try:
        lam, mu, nu = partition(lam), partition(mu), partition(nu)
    except ValueError as exc:
        raise ArityError(str(exc)) from None
    if not contains(lam, mu):
        raise ArityError(f"{mu} is not contained in {lam}")
    if sum(lam) != sum(mu) + sum(nu):
        raise ArityError(f"|{lam}| != |{mu}| + |{nu}|")
    return lam, mu, nu


def _search(shape: SkewShape, nu: Partition, prefix: tuple[int, ...] = (), stop: int | None = None) -> list[tuple[int, ...]]:
    """Row words (in reading order) of LR fillings extending ``prefix``.

    With ``stop`` set, the search returns the valid prefixes of that length
    instead of complete words.
    """
    order = [(i, j) for i in range(shape.nrows) for j in reversed(shape.row_span(i))]
    end = len(order) if stop is None else min(stop, len(order))
    inner = shape.inner
    t = len(nu)
    counts = [0] * (t + 2)
    filled: dict[tuple[int, int], int] = {}
    letters: list[int] = []
    found: list[tuple[int, ...]] = []

    def choices(k: int) -> range:
        i, j = order[k]
        hi = filled.get((i, j + 1), t)
        lo = filled[(i - 1, j)] + 1 if i > 0 and j >= part(inner, i - 1) else 1
        # a letter x in row i needs x <= i + 1 in an LR tableau
        return range(lo, min(hi, i + 1) + 1)

    def allowed(x: int) -> bool:
        return counts[x] < nu[x - 1] and (x == 1 or counts[x] < counts[x - 1])

    def push(k: int, x: int) -> None:
        counts[x] += 1
        filled[order[k]] = x
        letters.append(x)

    def pop(k: int, x: int) -> None:
        counts[x] -= 1
        del filled[order[k]]
        letters.pop()

    for k, x in enumerate(prefix):
        if x not in choices(k) or not allowed(x):
            return []
        push(k, x)

    def rec(k: int) -> None:
        if k == end:
            found.append(tuple(letters))
            return
        for x in choices(k):
            if allowed(x):
                push(k, x)
                rec(k + 1)
                pop(k, x)

    rec(len(prefix))
    return found


def _search_job(args) -> list[tuple[int, ...]]:
    return _search(*args)


def enumerate_shape(shape: SkewShape, nu: Sequence[int], jobs: int = 1) -> list[Tableau]:
    """LR tableaux of ``shape`` and weight ``nu``, sorted by row word.

    With ``jobs > 1`` the search tree is cut after a few cells and the
    subtrees run in worker processes; the merged list is the same.
    """
    nu = partition(nu)
    if shape.size != sum(nu):
        raise ArityError(f"|{shape}| != |{nu}|")
    if jobs > 1 and shape.size > 4:
        prefixes = _search(shape, nu, stop=4)
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = pool.map(_search_job, [(shape, nu, p) for p in prefixes])
            rows = sorted(w for chunk in parts for w in chunk)
    else:
        rows = _search(shape, nu)
    return [fill(shape, w, "row", len(nu)) for w in rows]


def enumerate_lr(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int], jobs: int = 1) -> list[Tableau]:
    """All tableaux in ``LR(lam/mu, nu)``, lexicographic in the row word."""
    lam, mu, nu = _check_triple(lam, mu, nu)
    return enumerate_shape(SkewShape(lam, mu), nu, jobs)


def lr_coefficient(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    return len(enumerate_lr(lam, mu, nu))


@dataclass(frozen=True)
class SymmetryReport:
    lam: Partition
    mu: Partition
    nu: Partition
    c: int
    conj_count: int
    comm_count: int
    diamond_count: int
    bijection_ok: bool

    @property
    def consistent(self) -> bool:
        return self.bijection_ok and self.c == self.conj_count == self.comm_count == self.diamond_count

    def to_json(self) -> dict:
        obj = {"lambda": list(self.lam), "mu": list(self.mu), "nu": list(self.nu)}
        obj.update((k, v) for k, v in asdict(self).items() if k not in ("lam", "mu", "nu"))
        return obj


def _image_ok(source: list[Tableau], target: list[Tableau], fn) -> bool:
    image = [fn(T) for T in source]
    return len(set(image)) == len(source) and set(image) == set(target)


def verify_symmetries(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> SymmetryReport:
    """Count the conjugate, commuted and diamond LR sets and check the bijections onto them."""
    from .conjugation import rho3

    lam, mu, nu = _check_triple(lam, mu, nu)
    shape = SkewShape(lam, mu)
    base = enumerate_shape(shape, nu)
    conj = enumerate_lr(conjugate(lam), conjugate(mu), conjugate(nu))
    comm = enumerate_lr(lam, nu, mu) if contains(lam, nu) else []
    dia = enumerate_shape(diamond_shape(shape), conjugate(nu))
    ok = _image_ok(base, conj, rho3) and _image_ok(base, dia, blacklozenge_slow)
    return SymmetryReport(lam, mu, nu, len(base), len(conj), len(comm), len(dia), ok)


def bounded_triples(max_cells: int = DEFAULT_MAX_CELLS, max_part: int = DEFAULT_MAX_PART,
                    max_len: int = DEFAULT_MAX_LEN) -> Iterator[tuple[Partition, Partition, Partition]]:
    """Every triple with ``|lam| <= max_cells`` and ``lam`` inside the ``max_len x max_part`` box.

    ``mu`` runs over all subpartitions of ``lam`` and ``nu`` over all
    partitions of the remaining size that fit inside ``lam`` (the others have
    empty LR sets on both sides).
    """
    for n in range(max_cells + 1):
        for lam in partitions(n, max_part, max_len):
            for mu in subpartitions(lam):
                for nu in partitions(n - sum(mu), part(lam, 0), len(lam)):
                    if contains(lam, nu):
                        yield lam, mu, nu


def bounded_lr_tableaux(max_cells: int = DEFAULT_MAX_CELLS, max_part: int = DEFAULT_MAX_PART,
                        max_len: int = DEFAULT_MAX_LEN) -> Iterator[Tableau]:
    """Every LR tableau of every bounded triple."""
    for lam, mu, nu in bounded_triples(max_cells, max_part, max_len):
        yield from enumerate_lr(lam, mu, nu)


def canonical_key(T: Tableau) -> tuple:
    return (T.outer, T.inner, row_word(T).letters)
