"""Crystal reflections on words and the reversal of LR tableaux."""
from __future__ import annotations

from typing import Sequence

from .errors import NotLRError, NotYamanouchiError
from .jdt import evacuate, rectify
from .switching import unique_in_classes
from .tableau import Tableau, fill, is_lr, row_word
from .words import Word, is_yamanouchi


def sigma(i: int, w: Word) -> Word:
    """Reflection on the ``{i, i+1}`` letters of ``w``.

    Each ``i`` is bracketed with a later ``i+1``. The unbracketed letters read
    ``(i+1)^b i^a`` and are rewritten as ``(i+1)^a i^b``.
    """
    if not 1 <= i < w.bound:
        raise IndexError(f"sigma_{i} is undefined on the alphabet 1..{w.bound}")
    opened: list[int] = []
    lone: list[int] = []
    for k, x in enumerate(w.letters):
        if x == i:
            opened.append(k)
        elif x == i + 1:
            if opened:
                opened.pop()
            else:
                lone.append(k)
    free = lone + opened
    a = len(opened)
    out = list(w.letters)
    for n, k in enumerate(free):
        out[k] = i + 1 if n < a else i
    return Word(tuple(out), w.bound)


def longest_word(t: int, variant: str = "default") -> list[int]:
    """A reduced word for the longest permutation of ``S_t``, as a product left to right.

    ``default`` is ``(s1)(s2 s1)...(s_{t-1}...s1)``; ``alt`` is
    ``(s_{t-1})(s_{t-2} s_{t-1})...(s1...s_{t-1})``.
    """
    if variant == "default":
        return [j for k in range(1, t) for j in range(k, 0, -1)]
    if variant == "alt":
        return [j for k in range(t - 1, 0, -1) for j in range(k, t)]
    raise ValueError(f"unknown reduced word variant {variant!r}")


def sigma0(w: Word, reduced_word: Sequence[int] | None = None) -> Word:
    """Apply the reflections along a reduced word of the longest permutation.

    The rightmost factor acts first.
    """
    if reduced_word is None:
        reduced_word = longest_word(w.bound)
    for i in reversed(reduced_word):
        w = sigma(i, w)
    return w


def sigma_tableau(i: int, T: Tableau) -> Tableau:
    """Apply ``sigma_i`` to the row word of ``T``, keeping the shape."""
    return fill(T.shape, sigma(i, row_word(T)).letters, bound=T.bound)


def reversal(T: Tableau) -> Tableau:
    """The dual LR tableau of the same shape whose word is ``sigma0`` of ``T``'s word."""
    if not is_lr(T):
        raise NotLRError(f"reversal via sigma0 needs an LR tableau, got {T}")
    w = row_word(T)
    return fill(T.shape, sigma0(w).letters, bound=w.bound)


def reversal_general(T: Tableau) -> Tableau:
    """Reversal of an arbitrary tableau.

    The unique tableau Knuth equivalent to the evacuated rectification and
    dual equivalent to ``T``.
    """
    return unique_in_classes(evacuate(rectify(T)), T)


def theta_rows(i: int, w: Word) -> list[list[int]]:
    """Rows of the picture obtained from ``U(w)`` by sliding rows ``i`` and ``i+1``.

    Row ``j`` lists the positions ``k`` with ``sigma_i(w)_k = j``.
    """
    if not is_yamanouchi(w.letters):
        raise NotYamanouchiError(str(w))
    v = sigma(i, w)
    rows: list[list[int]] = [[] for _ in range(w.bound)]
    for k, x in enumerate(v.letters, start=1):
        rows[x - 1].append(k)
    return rows
