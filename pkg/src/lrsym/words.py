"""Words over a bounded alphabet ``{1, ..., bound}``."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import NotYamanouchiError
from .shapes import Partition, partition


@dataclass(frozen=True)
class Word:
    """A sequence of positive letters together with its alphabet bound.

    The bound matters for dualization (``i -> bound - i + 1``), so it is kept
    explicitly. It defaults to the largest letter.
    """

    letters: tuple[int, ...]
    bound: int = field(default=None)

    def __post_init__(self):
        letters = tuple(int(x) for x in self.letters)
        top = max(letters, default=0)
        bound = top if self.bound is None else int(self.bound)
        if letters and min(letters) < 1:
            raise ValueError(f"letters must be positive: {letters}")
        if bound < top:
            raise ValueError(f"bound {bound} is smaller than letter {top}")
        object.__setattr__(self, "letters", letters)
        object.__setattr__(self, "bound", bound)

    @classmethod
    def parse(cls, text: str, bound: int | None = None) -> "Word":
        """Digit string (``"1122131"``) or comma separated (``"1,10,2"``)."""
        text = text.strip()
        if "," in text:
            letters = [int(x) for x in text.split(",") if x.strip()]
        else:
            letters = [int(c) for c in text]
        return cls(tuple(letters), bound)

    def __str__(self) -> str:
        if self.bound <= 9:
            return "".join(str(x) for x in self.letters)
        return ",".join(str(x) for x in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, k):
        return self.letters[k]

    @property
    def weight(self) -> tuple[int, ...]:
        counts = [0] * self.bound
        for x in self.letters:
            counts[x - 1] += 1
        return tuple(counts)

    def with_letters(self, letters: Iterable[int]) -> "Word":
        return Word(tuple(letters), self.bound)


def is_yamanouchi(w: Word | Sequence[int]) -> bool:
    """Every prefix has at least as many ``i`` as ``i+1``."""
    counts: dict[int, int] = {}
    for x in w:
        c = counts.get(x, 0) + 1
        if x > 1 and c > counts.get(x - 1, 0):
            return False
        counts[x] = c
    return True


def dualize(w: Word) -> Word:
    t = w.bound
    return Word(tuple(t + 1 - x for x in reversed(w.letters)), t)


def is_dual_yamanouchi(w: Word) -> bool:
    return is_yamanouchi(dualize(w))


def yamanouchi_weight(w: Word) -> Partition:
    """The weight of a Yamanouchi word as a partition (trailing zeros dropped)."""
    return partition(w.weight)


def _diamond_lattice(w: Word) -> Word:
    seen: dict[int, int] = {}
    out = []
    for x in w.letters:
        seen[x] = seen.get(x, 0) + 1
        out.append(seen[x])
    return Word(tuple(out), seen.get(1, 0))


def diamond(w: Word) -> Word:
    """Conjugate the weight of a Yamanouchi or dual Yamanouchi word.

    On a Yamanouchi word of weight ``nu`` the k-th occurrence of each letter
    becomes ``k``, giving a Yamanouchi word of weight ``conjugate(nu)``. Dual
    Yamanouchi words go through ``dualize``.
    """
    if is_yamanouchi(w.letters):
        return _diamond_lattice(w)
    dual = dualize(w)
    if is_yamanouchi(dual.letters):
        return dualize(_diamond_lattice(dual))
    raise NotYamanouchiError(f"{w} is neither Yamanouchi nor dual Yamanouchi")


def diamond_dual_one_step(w: Word) -> Word:
    """``dualize(diamond(w))`` computed directly on a Yamanouchi word.

    The k-th occurrence of each letter becomes ``nu_1 - k + 1`` and the word is
    read backwards.
    """
    if not is_yamanouchi(w.letters):
        raise NotYamanouchiError(str(w))
    nu1 = w.letters.count(1)
    seen: dict[int, int] = {}
    out = []
    for x in w.letters:
        seen[x] = seen.get(x, 0) + 1
        out.append(nu1 - seen[x] + 1)
    return Word(tuple(reversed(out)), nu1)


def standardize_word(w: Word) -> Word:
    """Relabel by ``1..len(w)``; equal letters are numbered right to left."""
    weight = w.weight
    start = [0] * (len(weight) + 1)
    for i, m in enumerate(weight):
        start[i + 1] = start[i] + m
    used = [0] * len(weight)
    out = [0] * len(w)
    for k in range(len(w) - 1, -1, -1):
        x = w.letters[k] - 1
        used[x] += 1
        out[k] = start[x] + used[x]
    return Word(tuple(out), len(w))


def u_of(w: Word):
    """The standard tableau recording where each letter occurs.

    For a Yamanouchi word, row ``i`` lists the positions ``k`` with
    ``w_k = i``; the shape is the weight of ``w``. For a dual Yamanouchi word
    the same rows are right-justified, giving an anti-normal shape.
    """
    from .tableau import Tableau

    rows: list[list[int]] = [[] for _ in range(w.bound)]
    for k, x in enumerate(w.letters, start=1):
        rows[x - 1].append(k)
    if is_yamanouchi(w.letters):
        rows = [r for r in rows if r]
        return Tableau.from_rows(rows, bound=len(w))
    if is_dual_yamanouchi(w):
        width = max((len(r) for r in rows), default=0)
        return Tableau.from_rows(rows, inner=[width - len(r) for r in rows], bound=len(w))
    raise NotYamanouchiError(str(w))
