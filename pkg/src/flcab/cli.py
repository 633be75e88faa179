"""Command line interface.

Subcommands: eval (one expression), table (pairwise operation grid over the
standard atoms), selftest (invariant suites), report (tables written to a
directory as TSV plus rendered PNG).  Exit codes: 0 on success, 1 for a bad
expression or flag value, 2 for an internal invariant violation or a failed
selftest.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from . import checks
from .atoms import (
    ADELE,
    CIRCLE,
    INT,
    RAT,
    REAL,
    SOLENOID,
    Atom,
    EngineInvariantError,
    FlcaGroup,
    fin_cyc,
    is_prime,
    p_adic,
    pro_int,
    pruefer,
)
from .derived import derived_tensor, rhom
from .expr import ExprError, evaluate_text, render_json, render_text
from .homtensor import hom, tensor
from .k0 import k0_of, mul

_TABLE_OPS = ("rhom", "hom", "tensor", "dtensor", "k0mul")


def _parse_int_list(text: str, what: str) -> List[int]:
    out = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if not part.isdigit():
            raise ExprError(f"{what} wants comma separated integers, got {part!r}")
        out.append(int(part))
    if not out:
        raise ExprError(f"{what} must name at least one value")
    return sorted(set(out))


def grid_atoms(primes: Sequence[int], exps: Sequence[int]) -> List[Atom]:
    """The table axis: the six unparameterized atoms (Afin is reachable but
    not charted) followed by every p-local atom at the given primes, with
    finite cyclics taken at the given exponents."""
    for p in primes:
        if not is_prime(p):
            raise ExprError(f"{p} is not prime")
    for n in exps:
        if n < 1:
            raise ExprError(f"exponent {n} must be at least 1")
    locals_ = [fin_cyc(p, n) for p in primes for n in exps]
    locals_ += [pro_int(p) for p in primes]
    locals_ += [p_adic(p) for p in primes]
    locals_ += [pruefer(p) for p in primes]
    return [INT, RAT, REAL, CIRCLE, SOLENOID, ADELE] + sorted(locals_)


def _cell(op: str, ga: FlcaGroup, gb: FlcaGroup) -> str:
    if op == "rhom":
        return str(rhom(ga, gb))
    if op == "hom":
        return str(hom(ga, gb))
    if op == "tensor":
        return str(tensor(ga, gb))
    if op == "dtensor":
        return str(derived_tensor(ga, gb))
    return str(mul(k0_of(ga), k0_of(gb)))


def table_cells(op: str, atoms: Sequence[Atom]) -> List[List[str]]:
    groups = [FlcaGroup.of(a) for a in atoms]
    return [[_cell(op, ga, gb) for gb in groups] for ga in groups]


def table_tsv(op: str, atoms: Sequence[Atom], cells=None) -> str:
    names = [str(a) for a in atoms]
    if cells is None:
        cells = table_cells(op, atoms)
    lines = ["\t".join([op] + names)]
    for name, row in zip(names, cells):
        lines.append("\t".join([name] + row))
    return "\n".join(lines) + "\n"


def _render_png(op: str, names: List[str], cells: List[List[str]], path: Path) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    width = max(len(cell) for row in cells for cell in row)
    fig, ax = plt.subplots(
        figsize=(0.16 * (width + 4) * len(names), 0.4 * (len(names) + 2))
    )
    ax.set_axis_off()
    tbl = ax.table(
        cellText=cells, rowLabels=names, colLabels=names, loc="center", cellLoc="center"
    )
    tbl.auto_set_font_size(False)
    tbl.set_fontsize(6)
    tbl.scale(1, 1.3)
    ax.set_title(op)
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)


def _cmd_eval(args) -> int:
    value = evaluate_text(args.expr)
    print(render_json(value) if args.json else render_text(value))
    return 0


def _cmd_table(args) -> int:
    atoms = grid_atoms(
        _parse_int_list(args.primes, "--primes"), _parse_int_list(args.exps, "--exps")
    )
    if args.json:
        payload = {
            "kind": "table",
            "op": args.op,
            "atoms": [str(a) for a in atoms],
            "cells": table_cells(args.op, atoms),
        }
        print(json.dumps(payload))
    else:
        sys.stdout.write(table_tsv(args.op, atoms))
    return 0


def _cmd_selftest(args) -> int:
    names = None
    if args.suite:
        if args.suite not in checks.SUITES:
            known = ", ".join(checks.SUITES)
            print(
                f"error: unknown suite {args.suite!r} (one of: {known})",
                file=sys.stderr,
            )
            return 1
        names = [args.suite]
    return 0 if checks.run(names) else 2


def _cmd_report(args) -> int:
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    atoms = grid_atoms(
        _parse_int_list(args.primes, "--primes"), _parse_int_list(args.exps, "--exps")
    )
    names = [str(a) for a in atoms]
    for op in _TABLE_OPS:
        cells = table_cells(op, atoms)
        tsv_path = outdir / f"{op}_table.tsv"
        tsv_path.write_text(table_tsv(op, atoms, cells))
        png_path = outdir / f"{op}_table.png"
        _render_png(op, names, cells, png_path)
        print(tsv_path)
        print(png_path)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flcab",
        description="symbolic calculator for finite rank locally compact abelian groups",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate one expression")
    p_eval.add_argument("expr")
    p_eval.add_argument("--json", action="store_true", help="emit a JSON object")

    p_table = sub.add_parser("table", help="pairwise operation table")
    p_table.add_argument("--op", choices=_TABLE_OPS, required=True)
    p_table.add_argument("--primes", default="2,3", help="comma separated primes")
    p_table.add_argument(
        "--exps", default="1,2", help="comma separated finite cyclic exponents"
    )
    fmt = p_table.add_mutually_exclusive_group()
    fmt.add_argument("--tsv", action="store_true", help="tab separated (default)")
    fmt.add_argument("--json", action="store_true")

    p_self = sub.add_parser("selftest", help="run the invariant suites")
    p_self.add_argument("--suite", help="run one suite by name")

    p_report = sub.add_parser("report", help="write every table as TSV and PNG")
    p_report.add_argument("--outdir", required=True)
    p_report.add_argument("--primes", default="2,3")
    p_report.add_argument("--exps", default="1,2")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    handler = {
        "eval": _cmd_eval,
        "table": _cmd_table,
        "selftest": _cmd_selftest,
        "report": _cmd_report,
    }[args.command]
    try:
        return handler(args)
    except ExprError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except EngineInvariantError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
