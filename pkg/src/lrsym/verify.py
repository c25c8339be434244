"""Property suites over the bounded exhaustive family.

Each suite walks its instances in increasing size, so the first failure of a
property is also a smallest counterexample for it.
"""
from __future__ import annotations

import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

from .circuits import E_from_rho3, evaluate, rho3_from_E
from .conjugation import ORDERS, blacklozenge_fast, rho3, rho3_variants
from .crystal import longest_word, reversal, reversal_general, sigma, sigma0
from .jdt import anti_normal, contracting_slide, evacuate, expanding_slide, rectify
from .oracle import DEFAULT_MAX_LEN, DEFAULT_MAX_PART, bounded_lr_tableaux
from .plactic import burge, dual_equivalent, knuth_equivalent
from .shapes import conjugate, partition
from .switching import rho_bss, switch, unique_in_classes
from .tableau import (
    Tableau,
    blacklozenge_slow,
    is_dual_lr,
    is_lr,
    rotate,
    row_word,
    standardize,
    tau,
    tau_inv,
    tableau_to_json,
    transpose_standard,
    yamanouchi_tableau,
)
from .words import Word

SUITES = ("involutions", "confluence", "crystal", "switching", "conjugation", "tau-diagram", "fast-slow")


@dataclass
class Failure:
    prop: str
    witness: object
    detail: str = ""

    def describe(self) -> str:
        w = self.witness
        if isinstance(w, Tableau):
            shown = f"{w}  {tableau_to_json(w)}"
        else:
            shown = str(w)
        return f"{self.prop}: {shown}" + (f" ({self.detail})" if self.detail else "")


@dataclass
class SuiteResult:
    suite: str
    checked: dict[str, int] = field(default_factory=dict)
    failures: dict[str, Failure] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, prop: str, witness, fn: Callable[[], bool]) -> None:
        self.checked[prop] = self.checked.get(prop, 0) + 1
        if prop in self.failures:
            return
        try:
            good = fn()
            detail = ""
        except Exception as exc:  # a crash on a valid input is a failure too
            good, detail = False, f"{type(exc).__name__}: {exc}"
        if not good:
            self.failures[prop] = Failure(prop, witness, detail)

    def merge(self, other: "SuiteResult") -> None:
        for k, v in other.checked.items():
            self.checked[k] = self.checked.get(k, 0) + v
        for k, v in other.failures.items():
            self.failures.setdefault(k, v)


# instance families ----------------------------------------------------------

def lr_instances(max_cells: int) -> list[Tableau]:
    return list(bounded_lr_tableaux(max_cells, DEFAULT_MAX_PART, DEFAULT_MAX_LEN))


def words(max_len: int, max_letter: int) -> Iterator[Word]:
    for n in range(1, max_len + 1):
        for t in range(2, max_letter + 1):
            for letters in itertools.product(range(1, t + 1), repeat=n):
                yield Word(letters, t)


def random_words(rng: random.Random, count: int, lengths: range, max_letter: int) -> Iterator[Word]:
    for _ in range(count):
        t = rng.randint(2, max_letter)
        n = rng.choice(lengths)
        yield Word(tuple(rng.randint(1, t) for _ in range(n)), t)


# suites ----------------------------------------------------------------------

def _involutions(Ts: list[Tableau], seed: int) -> SuiteResult:
    r = SuiteResult("involutions")
    for T in Ts:
        box = T.shape.box
        tbox = (box[1], box[0])
        r.check("rotate twice", T, lambda: rotate(rotate(T, box), box) == T)
        r.check("blacklozenge twice", T, lambda: blacklozenge_slow(blacklozenge_slow(T, box), tbox) == T)
        R = reversal(T)
        r.check("blacklozenge twice (dual LR)", R, lambda: blacklozenge_slow(blacklozenge_slow(R, box), tbox) == R)
        w = row_word(T)
        for i in range(1, w.bound):
            r.check("sigma_i twice", w, lambda: sigma(i, sigma(i, w)) == w)
        P = tau(T)
        r.check("evacuation twice", P, lambda: evacuate(evacuate(P)) == P)
        S = standardize(T)
        r.check("transpose twice", S, lambda: transpose_standard(transpose_standard(S)) == S)
        r.check("reversal twice", T, lambda: reversal_general(reversal(T)) == T)
    return r


def _confluence(Ts: list[Tableau], seed: int, orders: int = 50) -> SuiteResult:
    r = SuiteResult("confluence")
    rng = random.Random(seed)
    for T in Ts:
        for X in (T, rotate(T), standardize(T)):
            target = rectify(X)
            r.check("rectification corner order", X,
                    lambda: all(rectify(X, rng) == target for _ in range(orders)))
            r.check("anti-normal form is Knuth equivalent", X, lambda: knuth_equivalent(anti_normal(X), X))
            for c in X.shape.inside_corners():
                def undo(X=X, c=c):
                    Y, end = contracting_slide(X, c)
                    back, start = expanding_slide(Y, end)
                    return back == X and start == c
                r.check("expanding slide undoes contracting slide", X, undo)
    return r


def _crystal(Ts: list[Tableau], seed: int, exhaustive_len: int = 6, sampled: int = 3000) -> SuiteResult:
    r = SuiteResult("crystal")
    rng = random.Random(seed)
    pool = itertools.chain(words(exhaustive_len, 4), random_words(rng, sampled, range(7, 13), 4))
    for w in pool:
        r.check("sigma0 independent of reduced word", w,
                lambda: sigma0(w) == sigma0(w, longest_word(w.bound, "alt")))
        r.check("sigma0 reverses the weight", w,
                lambda: sigma0(w).weight == tuple(reversed(w.weight)))
        q = burge(w).q
        for i in range(1, w.bound):
            r.check("Q symbol preserved by sigma_i", w, lambda: burge(sigma(i, w)).q == q)
    for T in Ts:
        R = reversal(T)
        r.check("reversal is dual LR and dual equivalent", T, lambda: is_dual_lr(R) and dual_equivalent(R, T))
        r.check("reversal is Knuth equivalent to the rotated Yamanouchi tableau", T,
                lambda: knuth_equivalent(R, rotate(yamanouchi_tableau(T.weight))))
        r.check("reversal agrees with the class intersection", T, lambda: reversal_general(T) == R)
    return r


def _switching(Ts: list[Tableau], seed: int) -> SuiteResult:
    r = SuiteResult("switching")
    for T in Ts:
        if T.inner:
            s = yamanouchi_tableau(T.inner)
            for S in (s, standardize(s), evacuate(s)):
                a, b = switch(S, T)
                r.check("switch classes", T, lambda: knuth_equivalent(a, T) and knuth_equivalent(b, S))
                r.check("switch region", T, lambda: a.inner == S.inner and b.inner == a.outer and b.outer == T.outer)
                r.check("switch from normal shape rectifies", T, lambda: a == rectify(T))
                r.check("switch involution", T, lambda: switch(a, b) == (S, T))
        r.check("unique_in_classes fixed point", T, lambda: unique_in_classes(rectify(T), T) == T)
        r.check("rho_bss postconditions", T, lambda: is_lr(rho_bss(T)))
    return r


def _conjugation(Ts: list[Tableau], seed: int) -> SuiteResult:
    r = SuiteResult("conjugation")
    for T in Ts:
        X = rho3(T)
        r.check("rho3 equals rho_bss", T, lambda: X == rho_bss(T))
        r.check("rho3 orders agree", T, lambda: all(rho3_variants(T, o) == X for o in ORDERS))
        r.check("rho3 lands in the conjugate LR set", T,
                lambda: is_lr(X) and X.shape.outer == conjugate(T.outer) and X.inner == conjugate(T.inner)
                and partition(X.weight) == conjugate(partition(T.weight)))
        r.check("rho3 twice", T, lambda: rho3(X) == T)
    return r


def _tau_diagram(Ts: list[Tableau], seed: int) -> SuiteResult:
    r = SuiteResult("tau-diagram")
    c1, c2 = rho3_from_E(), E_from_rho3()
    for T in Ts:
        P = tau(T)
        r.check("tau(rotate(reversal(T))) = evacuate(tau(T))", T,
                lambda: tau(rotate(reversal(T)), T.nrows) == evacuate(P))
        r.check("tau_inv inverts tau", T, lambda: tau_inv(P, T.inner) == T)
        r.check("rho3 from one evacuation", T, lambda: evaluate(c1, T)[0] == rho3(T))
        r.check("evacuation from one rho3", P, lambda: evaluate(c2, P)[0] == evacuate(P))
    return r


def _fast_slow(Ts: list[Tableau], seed: int) -> SuiteResult:
    r = SuiteResult("fast-slow")
    for T in Ts:
        box = T.shape.box
        r.check("fast blacklozenge (LR)", T, lambda: blacklozenge_fast(T, box) == blacklozenge_slow(T, box))
        R = reversal(T)
        r.check("fast blacklozenge (dual LR)", R, lambda: blacklozenge_fast(R, box) == blacklozenge_slow(R, box))
    return r


RUNNERS: dict[str, Callable[[list[Tableau], int], SuiteResult]] = {
    "involutions": _involutions,
    "confluence": _confluence,
    "crystal": _crystal,
    "switching": _switching,
    "conjugation": _conjugation,
    "tau-diagram": _tau_diagram,
    "fast-slow": _fast_slow,
}

# word-based properties are not split across workers
_UNSPLIT = {"crystal"}


def _run_chunk(args) -> SuiteResult:
    name, Ts, seed = args
    return RUNNERS[name](Ts, seed)


def run_suite(name: str, max_cells: int = 10, seed: int = 0, jobs: int = 1,
              instances: list[Tableau] | None = None) -> SuiteResult:
    if name not in RUNNERS:
        raise KeyError(f"unknown suite {name!r}; choose from all, {', '.join(SUITES)}")
    Ts = lr_instances(max_cells) if instances is None else instances
    if jobs <= 1 or name in _UNSPLIT or len(Ts) < 2 * jobs:
        return RUNNERS[name](Ts, seed)
    # contiguous chunks keep the size order, so merging in chunk order keeps
    # the first failure the smallest one
    size = -(-len(Ts) // jobs)
    chunks = [(name, Ts[k:k + size], seed + k) for k in range(0, len(Ts), size)]
    out = SuiteResult(name)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for part in pool.map(_run_chunk, chunks):
            out.merge(part)
    return out


def run(suite: str = "all", max_cells: int = 10, seed: int = 0, jobs: int = 1) -> list[SuiteResult]:
    names: Iterable[str] = SUITES if suite == "all" else (suite,)
    Ts = lr_instances(max_cells)
    return [run_suite(n, max_cells, seed, jobs, Ts) for n in names]
