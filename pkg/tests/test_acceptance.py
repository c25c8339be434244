"""Acceptance criteria, one test each.

Every test prints a single ``PASS criterion N: ...`` or ``FAIL criterion N: ...``
line straight to the terminal, so ``pytest tests/test_acceptance.py`` shows
the verdicts even with output capture on.
"""
import random
import time
from functools import lru_cache

import pytest

import goldens as g
from lrsym import verify
from lrsym.circuits import E_from_rho3, bench, dilate, evaluate, loglog_slope, rho3_from_E
from lrsym.conjugation import blacklozenge_fast, fast_blacklozenge, rho3
from lrsym.crystal import reversal, sigma0
from lrsym.errors import PostconditionError, RemarkViolation
from lrsym.jdt import evacuate
from lrsym.oracle import bounded_lr_tableaux, bounded_triples, verify_symmetries
from lrsym.switching import rho_bss, switch
from lrsym.tableau import (
    Tableau,
    blacklozenge_slow,
    column_word,
    recording_matrix,
    rotate,
    row_word,
    standardize,
    tau,
    transpose_standard,
    yamanouchi_tableau,
)
from lrsym.words import diamond, dualize, u_of

SLOPE_REPEATS = 9


@pytest.fixture
def report(capsys):
    def emit(n: int, ok: bool, text: str) -> None:
        with capsys.disabled():
            print(f"\n{'PASS' if ok else 'FAIL'} criterion {n}: {text}")
    return emit


@lru_cache(maxsize=None)
def exhaustive() -> tuple[Tableau, ...]:
    return tuple(bounded_lr_tableaux())


# every rho_bss call made by criteria 1 and 2 is logged here for criterion 8
_bss_log = {"calls": 0, "violations": []}


def _logged_bss(T: Tableau) -> Tableau:
    _bss_log["calls"] += 1
    try:
        return rho_bss(T)
    except PostconditionError as exc:
        _bss_log["violations"].append((T, str(exc)))
        raise


@lru_cache(maxsize=None)
def golden_checks() -> tuple[tuple[str, bool], ...]:
    T0 = Tableau.parse(g.T0)
    T1 = Tableau.parse(g.T1)
    w1 = row_word(T1)
    U = Tableau.parse(g.T0_STANDARD_T)
    a, z = switch(yamanouchi_tableau((2, 1)), U)
    checks = [
        ("row word", str(row_word(T0)) == g.T0_ROW_WORD),
        ("column word", str(column_word(T0)) == g.T0_COLUMN_WORD),
        ("standardization", standardize(T0) == Tableau.parse(g.T0_STANDARD)),
        ("standard word", ",".join(map(str, row_word(standardize(T0)).letters)) == g.T0_STANDARD_WORD),
        ("standard transpose", transpose_standard(standardize(T0)) == Tableau.parse(g.T0_STANDARD_T)),
        ("recording matrix", recording_matrix(T0).dense() == g.T0_MATRIX),
        ("tau", tau(T0) == Tableau.parse(g.T0_TAU)),
        ("sigma0", str(sigma0(row_word(T0))) == g.T0_SIGMA0_WORD),
        ("reversal", reversal(T0) == Tableau.parse(g.T0_REVERSAL)),
        ("rotated reversal", rotate(reversal(T0)) == Tableau.parse(g.T0_REVERSAL_ROTATED)),
        ("rho3", rho3(T0) == Tableau.parse(g.T0_RHO3)),
        ("rho3 column word", str(column_word(rho3(T0))) == g.T0_RHO3_COLUMN_WORD),
        ("rho_bss", _logged_bss(T0) == Tableau.parse(g.T0_RHO3)),
        ("U tableau of T0", u_of(row_word(T0)) == Tableau.parse(g.T0_U)),
        ("evacuated tau", evacuate(tau(T0)) == Tableau.parse(g.T0_TAU_EVACUATED)),
        ("T1 row word", str(w1) == g.T1_ROW_WORD),
        ("diamond word", str(diamond(w1)) == g.T1_WORD_DIAMOND),
        ("dual diamond word", str(dualize(diamond(w1))) == g.T1_WORD_DIAMOND_DUAL),
        ("T1 blacklozenge", blacklozenge_slow(T1) == Tableau.parse(g.T1_BLACKLOZENGE)),
        ("T1 blacklozenge fast", blacklozenge_fast(T1) == Tableau.parse(g.T1_BLACKLOZENGE)),
        ("rotated T1 blacklozenge", rotate(blacklozenge_slow(T1)) == Tableau.parse(g.T1_BLACKLOZENGE_ROTATED)),
        ("U tableau of T1", u_of(w1) == Tableau.parse(g.T1_U)),
        ("U tableau of the diamond word", u_of(diamond(w1)) == Tableau.parse(g.T1_U_DIAMOND)),
        ("U tableau of the dual word", u_of(dualize(diamond(w1))) == Tableau.parse(g.T1_U_DIAMOND_DUAL)),
        ("T1 matrix", recording_matrix(T1).dense() == g.T1_MATRIX),
        ("fast matrix", fast_blacklozenge(recording_matrix(T1)).dense() == g.T1_FAST_MATRIX),
        ("switching: rectified part", a == Tableau.parse(g.T0_STANDARD_T_RECTIFIED)),
        ("switching: displaced part", z.cells() == g.T0_Z_CELLS),
    ]
    return tuple(checks)


def test_criterion_1_goldens(report):
    start = time.perf_counter()
    golden_checks.cache_clear()
    checks = golden_checks()
    elapsed = time.perf_counter() - start
    bad = [name for name, ok in checks if not ok]
    ok = not bad and elapsed < 1.0
    report(1, ok, f"{len(checks) - len(bad)}/{len(checks)} worked values exact in {elapsed:.3f}s"
           + (f"; wrong: {', '.join(bad)}" if bad else ""))
    assert ok


def test_criterion_2_rho3_equals_bss(report):
    start = time.perf_counter()
    Ts = exhaustive()
    mismatches = [T for T in Ts if rho3(T) != _logged_bss(T)]
    elapsed = time.perf_counter() - start
    ok = not mismatches and elapsed < 300 and len(Ts) >= 1000
    report(2, ok, f"rho3 = rho_bss on {len(Ts)} LR tableaux, {len(mismatches)} mismatches, {elapsed:.1f}s")
    assert ok, mismatches[:3]


def test_criterion_3_fast_equals_slow(report):
    Ts = exhaustive()
    bad = []
    for T in Ts:
        box = T.shape.box
        R = reversal(T)
        if blacklozenge_fast(T, box) != blacklozenge_slow(T, box):
            bad.append(T)
        if blacklozenge_fast(R, box) != blacklozenge_slow(R, box):
            bad.append(R)
    rng = random.Random(3)
    bases = [Tableau.parse(g.T0), Tableau.parse(g.T1)] + rng.sample([T for T in Ts if T.shape.size >= 6], 8)
    dilated = 0
    largest = 0
    for base in bases:
        for k in (7, 100, 100000 // base.shape.size):
            D = dilate(base, k)
            dilated += 1
            largest = max(largest, D.shape.size)
            if blacklozenge_fast(D) != blacklozenge_slow(D):
                bad.append(D)
            R = reversal(D) if k <= 100 else None
            if R is not None and blacklozenge_fast(R) != blacklozenge_slow(R):
                bad.append(R)
    ok = not bad and largest >= 100000
    report(3, ok, f"fast = slow on {2 * len(Ts)} LR and dual LR tableaux and {dilated} dilations "
           f"up to {largest} cells, {len(bad)} mismatches")
    assert ok


def test_criterion_4_tau_diagram(report):
    Ts = exhaustive()
    bad = [T for T in Ts if tau(rotate(reversal(T)), T.nrows) != evacuate(tau(T))]
    report(4, not bad, f"tau(rotate(reversal(T))) = evacuate(tau(T)) on {len(Ts)} tableaux, {len(bad)} mismatches")
    assert not bad


def test_criterion_5_counts(report):
    triples = list(bounded_triples())
    reports = [verify_symmetries(*t) for t in triples]
    bad = [r for r in reports if not r.consistent]
    total = sum(r.c for r in reports)
    report(5, not bad, f"{len(triples)} triples ({total} tableaux), {len(bad)} with unequal counts or a broken bijection")
    assert not bad, [r.to_json() for r in bad[:3]]


def test_criterion_6_involutions_and_confluence(report):
    Ts = list(exhaustive())
    results = [verify.run_suite(name, 10, 0, 1, Ts) for name in ("involutions", "confluence", "crystal")]
    failures = [f.describe() for r in results for f in r.failures.values()]
    checks = sum(sum(r.checked.values()) for r in results)
    report(6, not failures, f"involution, confluence (50 orders) and crystal suites: {checks} checks, "
           f"{len(failures)} failing properties")
    assert not failures, failures


def test_criterion_7_linearity(report):
    base = Tableau.parse(g.T0)
    rows = bench("fast-blacklozenge", base, range(1, 257), repeats=SLOPE_REPEATS)
    slope = loglog_slope([r.cells for r in rows], [r.median_nanos for r in rows])
    remark = 0
    for T in exhaustive():
        for X in (T, reversal(T)):
            try:
                fast_blacklozenge(recording_matrix(X), X.shape.box, check=True)
            except RemarkViolation:
                remark += 1
    for k in (1, 16, 256):
        try:
            fast_blacklozenge(recording_matrix(dilate(base, k)), check=True)
        except RemarkViolation:
            remark += 1
    c1, c2 = rho3_from_E(), E_from_rho3()
    counts = set()
    for T in exhaustive():
        counts.add(evaluate(c1, T)[1].alpha_calls)
        counts.add(evaluate(c2, tau(T))[1].alpha_calls)
    ok = 0.8 <= slope <= 1.2 and remark == 0 and counts == {1}
    report(7, ok, f"log-log slope {slope:.3f} over k=1..256, {remark} row-collision violations, "
           f"alpha calls per evaluation {sorted(counts)}")
    assert ok


def test_criterion_8_postconditions(report):
    if not _bss_log["calls"]:
        golden_checks()
        for T in exhaustive():
            _logged_bss(T)
    calls, bad = _bss_log["calls"], _bss_log["violations"]
    report(8, not bad and calls > 0, f"rho_bss class-membership postconditions held on {calls} calls, "
           f"{len(bad)} violations")
    assert not bad and calls > 0
