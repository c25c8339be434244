"""Command line entry point: ``lrsym apply|enumerate|coeff|verify|bench``.

Exit status is 0 on success, 1 when a verification fails and 2 on bad input.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import circuits, verify
from .conjugation import blacklozenge_fast, rho3
from .crystal import reversal, reversal_general, sigma0, sigma_tableau
from .errors import LRError, UnknownMapError
from .jdt import anti_normal, evacuate, rectify
from .oracle import enumerate_lr, verify_symmetries
from .shapes import parse_partition
from .switching import rho_bss, rho_whs
from .tableau import (
    Tableau,
    blacklozenge_slow,
    fill,
    is_lr,
    rotate,
    row_word,
    standardize,
    tableau_from_json,
    tableau_to_json,
    tau,
    tau_inv,
    transpose_standard,
)

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2

DEFAULT_BASE = "..1111/.122/233"


class InputError(Exception):
    pass


def _box(args):
    if not args.box:
        return None
    try:
        r, c = (int(x) for x in args.box.split(","))
    except ValueError:
        raise InputError(f"--box wants ROWS,COLS, got {args.box!r}") from None
    return (r, c)


def _sigma0_tableau(T: Tableau, args) -> Tableau:
    return fill(T.shape, sigma0(row_word(T)).letters, bound=T.bound)


def _reversal(T: Tableau, args) -> Tableau:
    return reversal(T) if is_lr(T) else reversal_general(T)


def _tau_inv(T: Tableau, args) -> Tableau:
    if args.inner is None:
        raise InputError("tau-inv needs --inner")
    return tau_inv(T, parse_partition(args.inner))


MAPS = {
    "rho3": lambda T, a: rho3(T),
    "bss": lambda T, a: rho_bss(T),
    "whs": lambda T, a: rho_whs(T),
    "blacklozenge": lambda T, a: blacklozenge_slow(T, _box(a)),
    "blacklozenge-fast": lambda T, a: blacklozenge_fast(T, _box(a)),
    "rotate": lambda T, a: rotate(T, _box(a)),
    "reversal": _reversal,
    "evacuate": lambda T, a: evacuate(T),
    "rectify": lambda T, a: rectify(T),
    "anti-normal": lambda T, a: anti_normal(T),
    "standardize": lambda T, a: standardize(T),
    "transpose": lambda T, a: transpose_standard(T),
    "tau": lambda T, a: tau(T),
    "tau-inv": _tau_inv,
    "sigma0": _sigma0_tableau,
}


def _lookup(name: str):
    if name.startswith("sigma:"):
        try:
            i = int(name.split(":", 1)[1])
        except ValueError:
            raise InputError(f"bad reflection index in {name!r}") from None
        return lambda T, a: sigma_tableau(i, T)
    if name not in MAPS:
        raise InputError(f"unknown map {name!r}; choose from {', '.join(sorted(MAPS))}, sigma:i")
    return MAPS[name]


def read_tableau(source: str) -> Tableau:
    """JSON object from a file or ``-``; the compact text form is accepted as well."""
    try:
        text = sys.stdin.read() if source == "-" else open(source).read()
    except OSError as exc:
        raise InputError(f"cannot read {source}: {exc}") from None
    text = text.strip()
    if text.startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"bad JSON in {source}: {exc}") from None
        return tableau_from_json(obj)
    return Tableau.parse(text)


def _emit(obj, out: str | None) -> None:
    text = json.dumps(obj)
    if out and out != "-":
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _triple(args):
    tokens = [t for t in args.triple if t != "/"]
    if len(tokens) == 1 and "/" in tokens[0]:
        tokens = tokens[0].split("/")
    if len(tokens) != 3:
        raise InputError("expected OUTER INNER WEIGHT")
    return tuple(parse_partition("" if t in ("-", "()") else t) for t in tokens)


def cmd_apply(args) -> int:
    fn = _lookup(args.map)
    T = read_tableau(args.input)
    _emit(tableau_to_json(fn(T, args)), args.out)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    lam, mu, nu = _triple(args)
    found = enumerate_lr(lam, mu, nu, jobs=args.jobs)
    if args.count:
        print(len(found))
    else:
        _emit([tableau_to_json(T) for T in found], args.out)
    return EXIT_OK


def cmd_coeff(args) -> int:
    lam, mu, nu = _triple(args)
    _emit(verify_symmetries(lam, mu, nu).to_json(), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.suite != "all" and args.suite not in verify.SUITES:
        raise InputError(f"unknown suite {args.suite!r}")
    if args.max_cells < 0:
        raise InputError("--max-cells must be non-negative")
    ok = True
    for res in verify.run(args.suite, args.max_cells, args.seed, args.jobs):
        total = sum(res.checked.values())
        status = "ok" if res.ok else "FAIL"
        print(f"{res.suite}: {status} ({total} checks, {len(res.checked)} properties)")
        for f in res.failures.values():
            print(f"  counterexample  {f.describe()}")
        ok = ok and res.ok
    return EXIT_OK if ok else EXIT_FAIL


def cmd_bench(args) -> int:
    try:
        scales = circuits.parse_scales(args.scales)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    base = read_tableau(args.base) if args.base else Tableau.parse(DEFAULT_BASE)
    try:
        rows = circuits.bench(args.map, base, scales, args.repeats)
    except UnknownMapError as exc:
        raise InputError(exc.args[0]) from None
    if args.csv and args.csv != "-":
        circuits.write_csv(rows, args.csv)
    else:
        circuits.write_csv(rows, sys.stdout)
    if len(rows) >= 2:
        slope = circuits.loglog_slope([r.cells for r in rows], [r.median_nanos for r in rows])
        print(f"log-log slope {slope:.3f} over {len(rows)} scales", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lrsym", description="LR tableaux and their conjugation symmetry maps.")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("apply", help="apply a map to a tableau")
    a.add_argument("map")
    a.add_argument("--in", dest="input", default="-", help="tableau JSON file, or - for stdin")
    a.add_argument("--out", default=None)
    a.add_argument("--inner", default=None, help="inner partition for tau-inv")
    a.add_argument("--box", default=None, help="ROWS,COLS for rotate and blacklozenge")
    a.set_defaults(func=cmd_apply)

    e = sub.add_parser("enumerate", help="list LR(outer/inner, weight)")
    e.add_argument("triple", nargs="+", metavar="PARTITION")
    e.add_argument("--count", action="store_true")
    e.add_argument("--jobs", type=int, default=1)
    e.add_argument("--out", default=None)
    e.set_defaults(func=cmd_enumerate)

    c = sub.add_parser("coeff", help="LR coefficient with the symmetric counts")
    c.add_argument("triple", nargs="+", metavar="PARTITION")
    c.add_argument("--out", default=None)
    c.set_defaults(func=cmd_coeff)

    v = sub.add_parser("verify", help="run a property suite")
    v.add_argument("suite", nargs="?", default="all", help="all, " + ", ".join(verify.SUITES))
    v.add_argument("--max-cells", type=int, default=10)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--jobs", type=int, default=1)
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bench", help="time a map on dilations of a base tableau")
    b.add_argument("map", nargs="?", default="fast-blacklozenge", help="one of " + ", ".join(sorted(circuits.MAPS)))
    b.add_argument("--base", default=None, help=f"tableau file (default {DEFAULT_BASE})")
    b.add_argument("--scales", default="1..256")
    b.add_argument("--repeats", type=int, default=5)
    b.add_argument("--csv", default=None)
    b.set_defaults(func=cmd_bench)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, LRError) as exc:
        print(f"lrsym: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (IndexError, KeyError) as exc:
        print(f"lrsym: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
