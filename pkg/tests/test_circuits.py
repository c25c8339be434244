import io

import numpy as np
import pytest

from conftest import small_lr
from goldens import T0, T0_RHO3, T0_TAU, T0_TAU_EVACUATED
from lrsym.circuits import (
    CSV_HEADER,
    AlphaNode,
    LinearMap,
    Par,
    Seq,
    Trivial,
    E_from_rho3,
    alpha_cost,
    bench,
    bitsize,
    dilate,
    evaluate,
    lift,
    loglog_slope,
    parse_scales,
    rho3_from_E,
    substitute,
    tableau_bitsize,
    write_csv,
)
from lrsym.conjugation import rho3
from lrsym.errors import CircuitTypeError, UnknownMapError
from lrsym.jdt import evacuate
from lrsym.shapes import conjugate
from lrsym.tableau import Tableau, is_lr, recording_matrix, tau, yamanouchi_tableau


def test_bitsize_formula():
    assert bitsize([3, 1, 2]) == 9
    assert bitsize([1]) == 1
    assert bitsize([0, 0]) == 2
    assert bitsize([]) == 0
    assert bitsize(np.array([[4, 0], [0, 1]])) == 12
    assert tableau_bitsize(Tableau.parse(T0)) == 27


def _double(x):
    return 2 * x


def test_costs_compose():
    a = AlphaNode("a", _double, "int", "int")
    inc = LinearMap("inc", lambda x: x + 1, "int", "int")
    t = Trivial(inc, a, inc)
    assert alpha_cost(t) == 1
    assert alpha_cost(Seq(t, t)) == 2
    p = Par(LinearMap("dup", lambda x: (x, x), "int", ("int", "int")), t, a,
            LinearMap("add", lambda ab: ab[0] + ab[1], ("int", "int"), "int"))
    assert alpha_cost(p) == 2
    out, report = evaluate(Seq(p, t), 3)
    assert out == 2 * (2 * 4 + 1 + 6 + 1) + 1 == 33
    assert report.alpha_calls == 3 == alpha_cost(Seq(p, t))


def test_substitution_multiplies_costs():
    a = AlphaNode("a", _double, "int", "int")
    inc = LinearMap("inc", lambda x: x + 1, "int", "int")
    outer = Seq(Trivial(inc, a, inc), Trivial(inc, a, inc))
    inner = Seq(Trivial(inc, a, inc), Seq(a, a))
    nested = substitute(outer, inner)
    assert alpha_cost(nested) == alpha_cost(outer) * alpha_cost(inner) == 6
    _, report = evaluate(nested, 1)
    assert report.alpha_calls == 6


def test_type_mismatch():
    a = AlphaNode("a", _double, "int", "int")
    to_str = LinearMap("str", str, "int", "str")
    with pytest.raises(CircuitTypeError):
        Seq(to_str, a)
    with pytest.raises(CircuitTypeError):
        substitute(a, to_str)


def test_reductions_on_the_running_example():
    T = Tableau.parse(T0)
    out, report = evaluate(rho3_from_E(), T, "rho3-from-E")
    assert out == Tableau.parse(T0_RHO3)
    assert report.alpha_calls == 1 and report.cells == 10 and report.bitsize == 27
    out, report = evaluate(E_from_rho3(), Tableau.parse(T0_TAU))
    assert out == Tableau.parse(T0_TAU_EVACUATED)
    assert report.alpha_calls == 1
    # the two reductions plugged into each other still cost one call
    both = substitute(rho3_from_E(), E_from_rho3())
    assert alpha_cost(both) == 1
    assert evaluate(both, T)[0] == Tableau.parse(T0_RHO3)


def test_reductions_on_yamanouchi():
    for nu in [(2,), (3, 1), (2, 2, 1)]:
        Y = yamanouchi_tableau(nu)
        assert evaluate(rho3_from_E(), Y)[0] == yamanouchi_tableau(conjugate(nu))
        P = tau(Y)
        assert evaluate(E_from_rho3(), P)[0] == evacuate(P)


def test_reductions_exhaustive_small():
    c1, c2 = rho3_from_E(), E_from_rho3()
    for T in small_lr(7):
        assert evaluate(c1, T)[0] == rho3(T)
        P = tau(T)
        assert tau(lift(P)) == P
        assert evaluate(c2, P)[0] == evacuate(P)


def test_dilate():
    T = Tableau.parse(T0)
    D = dilate(T, 2)
    assert D.outer == (12, 8, 6) and D.inner == (4, 2)
    assert D.weight == (10, 6, 4) and is_lr(D)
    assert dilate(T, 1) == T
    with pytest.raises(ValueError):
        dilate(T, 0)
    assert recording_matrix(dilate(T, 3)).dense() == [[12, 0, 0], [3, 6, 0], [0, 3, 6]]


def test_bench_and_csv():
    T = Tableau.parse(T0)
    rows = bench("fast-blacklozenge", T, [1, 2, 4], repeats=3)
    assert [r.cells for r in rows] == [10, 20, 40]
    assert all(r.median_nanos > 0 and r.alpha_calls == 0 for r in rows)
    buf = io.StringIO()
    write_csv(rows, buf)
    lines = buf.getvalue().splitlines()
    assert lines[0] == ",".join(CSV_HEADER) == "map,scale,cells,bitsize,median_nanos,alpha_calls"
    assert lines[1].startswith("fast-blacklozenge,1,10,27,")
    assert [r.alpha_calls for r in bench("rho3-from-E", T, [1, 2], 1)] == [1, 1]
    assert [r.alpha_calls for r in bench("E-from-rho3", T, [1], 1)] == [1]
    with pytest.raises(UnknownMapError):
        bench("nope", T, [1])


def test_scales_and_slope():
    assert parse_scales("1..4") == [1, 2, 3, 4]
    assert parse_scales("1,3..4,8") == [1, 3, 4, 8]
    with pytest.raises(ValueError):
        parse_scales("0..2")
    assert loglog_slope([1, 10, 100], [5, 50, 500]) == pytest.approx(1.0)
    assert loglog_slope([1, 10, 100], [3, 300, 30000]) == pytest.approx(2.0)
