"""Parallel-sequential circuits with alpha-cost accounting, bit sizes and the scaling bench."""
from __future__ import annotations

import csv
import gc
import statistics
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Sequence

import numpy as np

from .conjugation import blacklozenge_fast, fast_blacklozenge, rho3
from .crystal import reversal
from .errors import CircuitTypeError, UnknownMapError
from .jdt import evacuate
from .shapes import rotate_shape
from .switching import rho_bss
from .tableau import Tableau, blacklozenge_slow, recording_matrix, tau, tau_inv

CSV_HEADER = ("map", "scale", "cells", "bitsize", "median_nanos", "alpha_calls")


def bitsize(D) -> int:
    """Storage of an integer array: ``n * ceil(log2(m) + 1)`` with ``m`` the largest entry."""
    a = np.asarray(D, dtype=np.int64).ravel()
    if a.size == 0:
        return 0
    m = max(int(a.max()), 1)
    return int(a.size) * ((m - 1).bit_length() + 1)


def tableau_bitsize(T: Tableau) -> int:
    """Bit size of the dense recording matrix of ``T``."""
    return bitsize(recording_matrix(T).to_array()) if T.size else 0


# circuit nodes ------------------------------------------------------------

Type = Any  # a type tag: a string, or a tuple of tags for a pair


@dataclass(frozen=True)
class LinearMap:
    """A primitive assumed to run in time linear in the bit size of its input."""

    name: str
    fn: Callable = field(compare=False)
    dom: Type = "any"
    cod: Type = "any"


@dataclass(frozen=True)
class AlphaNode:
    """The oracle map whose uses are counted."""

    name: str
    fn: Callable = field(compare=False)
    dom: Type = "any"
    cod: Type = "any"


@dataclass(frozen=True)
class Trivial:
    pre: LinearMap
    inner: Any
    post: LinearMap

    def __post_init__(self):
        _link(self.pre.cod, self.inner.dom, "Trivial pre -> inner")
        _link(self.inner.cod, self.post.dom, "Trivial inner -> post")

    @property
    def dom(self):
        return self.pre.dom

    @property
    def cod(self):
        return self.post.cod


@dataclass(frozen=True)
class Seq:
    first: Any
    second: Any

    def __post_init__(self):
        _link(self.first.cod, self.second.dom, "Seq")

    @property
    def dom(self):
        return self.first.dom

    @property
    def cod(self):
        return self.second.cod


@dataclass(frozen=True)
class Par:
    split: LinearMap
    left: Any
    right: Any
    merge: LinearMap

    def __post_init__(self):
        _link(self.split.cod, (self.left.dom, self.right.dom), "Par split")
        _link((self.left.cod, self.right.cod), self.merge.dom, "Par merge")

    @property
    def dom(self):
        return self.split.dom

    @property
    def cod(self):
        return self.merge.cod


Circuit = LinearMap | AlphaNode | Trivial | Seq | Par


def _compatible(out: Type, into: Type) -> bool:
    if into == "any" or out == "any":
        return True
    if isinstance(out, tuple) and isinstance(into, tuple):
        return len(out) == len(into) and all(_compatible(a, b) for a, b in zip(out, into))
    return out == into


def _link(out: Type, into: Type, where: str) -> None:
    if not _compatible(out, into):
        raise CircuitTypeError(f"{where}: output type {out!r} does not feed input type {into!r}")


def alpha_cost(c: Circuit) -> int:
    """Number of alpha uses in the circuit, computed statically."""
    if isinstance(c, AlphaNode):
        return 1
    if isinstance(c, LinearMap):
        return 0
    if isinstance(c, Trivial):
        return alpha_cost(c.inner)
    if isinstance(c, Seq):
        return alpha_cost(c.first) + alpha_cost(c.second)
    if isinstance(c, Par):
        return alpha_cost(c.left) + alpha_cost(c.right)
    raise CircuitTypeError(f"not a circuit node: {c!r}")


def substitute(c: Circuit, alpha: Circuit) -> Circuit:
    """Replace every alpha node of ``c`` by the circuit ``alpha``."""
    if isinstance(c, AlphaNode):
        _link(c.dom, alpha.dom, f"substitute into {c.name}")
        _link(alpha.cod, c.cod, f"substitute into {c.name}")
        return alpha
    if isinstance(c, LinearMap):
        return c
    if isinstance(c, Trivial):
        inner = substitute(c.inner, alpha)
        return Trivial(c.pre, inner, c.post) if isinstance(inner, AlphaNode) else Seq(Seq(c.pre, inner), c.post)
    if isinstance(c, Seq):
        return Seq(substitute(c.first, alpha), substitute(c.second, alpha))
    if isinstance(c, Par):
        return Par(c.split, substitute(c.left, alpha), substitute(c.right, alpha), c.merge)
    raise CircuitTypeError(f"not a circuit node: {c!r}")


def _run(c: Circuit, x, counter: list[int]):
    if isinstance(c, AlphaNode):
        counter[0] += 1
        return c.fn(x)
    if isinstance(c, LinearMap):
        return c.fn(x)
    if isinstance(c, Trivial):
        return c.post.fn(_run(c.inner, c.pre.fn(x), counter))
    if isinstance(c, Seq):
        return _run(c.second, _run(c.first, x, counter), counter)
    if isinstance(c, Par):
        a, b = c.split.fn(x)
        return c.merge.fn((_run(c.left, a, counter), _run(c.right, b, counter)))
    raise CircuitTypeError(f"not a circuit node: {c!r}")


@dataclass(frozen=True)
class CostReport:
    cells: int
    bitsize: int
    wall_nanos: int
    alpha_calls: int
    map_name: str
    output_bitsize: int = 0


def evaluate(c: Circuit, x, name: str = "circuit") -> tuple[Any, CostReport]:
    """Run ``c`` on ``x``, counting alpha calls; the count must match ``alpha_cost``."""
    counter = [0]
    t0 = time.perf_counter_ns()
    out = _run(c, x, counter)
    elapsed = time.perf_counter_ns() - t0
    expected = alpha_cost(c)
    if counter[0] != expected:
        raise AssertionError(f"{name}: {counter[0]} alpha calls, static cost {expected}")
    cells = x.size if isinstance(x, Tableau) else 0
    bits = tableau_bitsize(x) if isinstance(x, Tableau) else 0
    out_bits = tableau_bitsize(out) if isinstance(out, Tableau) else 0
    return out, CostReport(cells, bits, elapsed, counter[0], name, out_bits)


# the two reductions --------------------------------------------------------

def _split_lr(T: Tableau):
    # the matrix transpose, plus the shape data the inverse step needs
    return tau(T, T.nrows), (T.shape, T.nrows)


def _merge_lr(pair) -> Tableau:
    P, (shape, n) = pair
    box = (n, shape.outer[0] if shape.outer else 0)
    rotated = rotate_shape(shape, box)
    back = tau_inv(P, rotated.inner)
    return blacklozenge_fast(back, box)


def rho3_from_E() -> Par:
    """Conjugation computed from one evacuation: ``T -> diamond(tau_inv(E(tau(T))))``."""
    return Par(
        LinearMap("tau+shape", _split_lr, "lr", ("normal", "shape")),
        AlphaNode("E", evacuate, "normal", "normal"),
        LinearMap("id", lambda s: s, "shape", "shape"),
        LinearMap("tau_inv+blacklozenge", _merge_lr, ("normal", "shape"), "lr"),
    )


def lift(P: Tableau) -> Tableau:
    """An LR tableau with ``tau`` equal to ``P`` and one row per letter of ``P``'s alphabet.

    Row ``i`` starts after one spare column plus room for all larger letters,
    so every row is nonempty and the gluing condition holds.
    """
    n = P.bound
    m = list(P.weight) + [0] * (n - len(P.weight))
    mu = [1 + sum(m[i + 1:]) for i in range(n)]
    return tau_inv(P, mu)


def _lift_rows(P: Tableau) -> tuple[Tableau, int]:
    return lift(P), P.bound


def _descend(pair) -> Tableau:
    X, n = pair
    return tau(blacklozenge_fast(X, X.shape.box), n)


def E_from_rho3() -> Par:
    """Evacuation computed from one conjugation: ``P -> tau(diamond(rho3(lift(P))))``."""
    return Par(
        LinearMap("lift", _lift_rows, "normal", ("lr", "int")),
        AlphaNode("rho3", rho3, "lr", "lr"),
        LinearMap("id", lambda n: n, "int", "int"),
        LinearMap("blacklozenge+tau", _descend, ("lr", "int"), "normal"),
    )


# dilation and bench --------------------------------------------------------

def dilate(T: Tableau, k: int) -> Tableau:
    """Repeat every column ``k`` times: shape ``k*lam/k*mu``, weight ``k*nu``."""
    if k < 1:
        raise ValueError("dilation factor must be at least 1")
    rows = [tuple(x for x in r for _ in range(k)) for r in T.rows]
    outer = tuple(k * x for x in T.outer)
    inner = tuple(k * x for x in T.inner)
    return Tableau(outer, inner, tuple(rows), T.bound)


@dataclass
class BenchMap:
    prepare: Callable[[Tableau], Any]
    run: Callable[[Any], Any]
    alpha: int = 0


def _blf_prepare(T: Tableau):
    return recording_matrix(T), T.shape.box


def _circuit_map(build: Callable[[], Circuit], prepare=lambda T: T) -> BenchMap:
    c = build()
    return BenchMap(prepare, lambda x: _run(c, x, [0]), alpha_cost(c))


MAPS: dict[str, BenchMap] = {
    "fast-blacklozenge": BenchMap(_blf_prepare, lambda mb: fast_blacklozenge(mb[0], mb[1])),
    "blacklozenge": BenchMap(lambda T: T, blacklozenge_slow),
    "rho3": BenchMap(lambda T: T, rho3),
    "bss": BenchMap(lambda T: T, rho_bss),
    "reversal": BenchMap(lambda T: T, reversal),
    "tau": BenchMap(lambda T: T, tau),
    "evacuate": BenchMap(lambda T: tau(T), evacuate),
    "rho3-from-E": _circuit_map(rho3_from_E),
    "E-from-rho3": _circuit_map(E_from_rho3, lambda T: tau(T)),
}


@dataclass(frozen=True)
class BenchRow:
    map: str
    scale: int
    cells: int
    bitsize: int
    median_nanos: int
    alpha_calls: int
    output_bitsize: int

    def csv_row(self) -> tuple:
        return (self.map, self.scale, self.cells, self.bitsize, self.median_nanos, self.alpha_calls)


def bench(name: str, base: Tableau, scales: Iterable[int], repeats: int = 5) -> list[BenchRow]:
    """Median wall time of map ``name`` on ``dilate(base, k)`` for each scale ``k``.

    Repeats run round-robin over the scales, so a slow stretch of machine
    time is spread across all of them instead of bending one end of the curve.
    Each timed call follows an untimed call on the same input.
    """
    try:
        entry = MAPS[name]
    except KeyError:
        raise UnknownMapError(f"unknown map {name!r}; known: {', '.join(sorted(MAPS))}") from None
    scales = list(scales)
    inputs = [dilate(base, k) for k in scales]
    prepared = [entry.prepare(T) for T in inputs]
    outputs = [entry.run(x) for x in prepared]  # warm-up, untimed
    times: list[list[int]] = [[] for _ in scales]
    gc_was_on = gc.isenabled()
    gc.disable()
    try:
        for _ in range(max(1, repeats)):
            for n, x in enumerate(prepared):
                entry.run(x)  # re-warm caches after the previous scale
                t0 = time.perf_counter_ns()
                entry.run(x)
                times[n].append(time.perf_counter_ns() - t0)
    finally:
        if gc_was_on:
            gc.enable()
    rows = []
    for k, T, out, ts in zip(scales, inputs, outputs, times):
        rows.append(BenchRow(name, k, T.size, tableau_bitsize(T), int(statistics.median(ts)), entry.alpha,
                             _output_bits(out)))
    return rows


def _output_bits(out) -> int:
    if isinstance(out, Tableau):
        return tableau_bitsize(out)
    return bitsize(out.to_array()) if out.entries else 0


def write_csv(rows: Sequence[BenchRow], path_or_file) -> None:
    if hasattr(path_or_file, "write"):
        _write(rows, path_or_file)
    else:
        with open(path_or_file, "w", newline="") as fh:
            _write(rows, fh)


def _write(rows: Sequence[BenchRow], fh) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in rows:
        w.writerow(r.csv_row())


def loglog_slope(cells: Sequence[float], nanos: Sequence[float]) -> float:
    """Least-squares slope of log(time) against log(cells)."""
    x = np.log(np.asarray(cells, dtype=float))
    y = np.log(np.asarray(nanos, dtype=float))
    return float(np.polyfit(x, y, 1)[0])


def parse_scales(text: str) -> list[int]:
    """``"1..256"``, ``"1,2,4"`` or a mix such as ``"1..4,8"``."""
    out: list[int] = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if ".." in chunk:
            lo, hi = chunk.split("..")
            out.extend(range(int(lo), int(hi) + 1))
        elif chunk:
            out.append(int(chunk))
    if not out or min(out) < 1:
        raise ValueError(f"bad scale list {text!r}")
    return out
