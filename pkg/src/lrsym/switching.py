"""Tableau switching, the Knuth/dual class intersection and the switching-based conjugation map."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import NotExtendingError, NotLRError, PostconditionError, ShapeError
from .jdt import _contract
from .plactic import dual_equivalent, knuth_equivalent
from .shapes import Cell, SkewShape, conjugate, transpose_shape
from .tableau import Tableau, is_lr, lr_weight, standardize, transpose_standard, yamanouchi_tableau


@dataclass(frozen=True)
class SwitchPair:
    inner: Tableau
    outer: Tableau

    def __post_init__(self):
        if self.outer.inner != self.inner.outer:
            raise NotExtendingError(f"{self.outer.shape} does not extend {self.inner.shape}")


def _outer_of(cells: dict[Cell, int], inner: tuple[int, ...]) -> tuple[int, ...]:
    lengths = list(inner)
    for i, j in cells:
        while len(lengths) <= i:
            lengths.append(0)
        lengths[i] = max(lengths[i], j + 1)
    return tuple(lengths)


def switch(s: Tableau, t: Tableau) -> tuple[Tableau, Tableau]:
    """Switch ``s`` with ``t``, where ``t`` extends ``s``.

    Returns ``(a, b)`` covering the same cells, ``b`` extending ``a``, with
    ``a`` Knuth equivalent to ``t`` and ``b`` Knuth equivalent to ``s``.
    """
    if t.inner != s.outer:
        raise NotExtendingError(f"{t.shape} does not extend {s.shape}")
    s_cells = s.cells()
    order = sorted(s_cells, key=lambda c: (s_cells[c], c[1]))
    moving = t.cells()
    placed: dict[Cell, int] = {}
    for c in reversed(order):
        placed[_contract(moving, c)] = s_cells[c]
    a_outer = _outer_of(moving, s.inner)
    a = Tableau.from_cells(moving, SkewShape(a_outer, s.inner), t.bound)
    b = Tableau.from_cells(placed, SkewShape(t.outer, a.outer), s.bound)
    return a, b


def unique_in_classes(v: Tableau, u: Tableau) -> Tableau:
    """The tableau of ``u``'s shape Knuth equivalent to ``v`` and dual equivalent to ``u``.

    ``v`` must have normal shape equal to the shape of ``u``'s rectification.
    Switch ``u`` down past a filling of its inner shape, swap the rectified
    part for ``v`` and switch back up.
    """
    if v.inner:
        raise ShapeError(f"the Knuth class representative must have normal shape, got {v.shape}")
    if sum(v.outer) != u.size:
        raise ShapeError(f"{v.shape} cannot be the rectified shape of {u.shape}")
    w = yamanouchi_tableau(u.inner)
    rect, z = switch(w, u)
    if rect.outer != v.outer:
        raise ShapeError(f"{u} rectifies to shape {rect.shape}, not {v.shape}")
    _, x = switch(v, z)
    return x


def rho_bss(T: Tableau) -> Tableau:
    """Conjugation symmetry map by switching.

    Standardize and transpose ``T``, then take the tableau in the Knuth class
    of ``Y(conjugate(nu))`` and the dual class of the transposed standard
    tableau. Both memberships, and the LR property, are checked before
    returning.
    """
    if not is_lr(T):
        raise NotLRError(f"rho_bss needs an LR tableau, got {T}")
    nu = lr_weight(T)
    target = yamanouchi_tableau(conjugate(nu))
    guide = transpose_standard(standardize(T))
    x = unique_in_classes(target, guide)
    if x.shape != transpose_shape(T.shape) or not is_lr(x):
        raise PostconditionError(f"rho_bss({T}) = {x} is not an LR tableau of the conjugate shape")
    if not knuth_equivalent(x, target):
        raise PostconditionError(f"rho_bss({T}) = {x} does not rectify to {target}")
    if not dual_equivalent(x, guide):
        raise PostconditionError(f"rho_bss({T}) = {x} is not dual equivalent to {guide}")
    return x


rho_whs = rho_bss
