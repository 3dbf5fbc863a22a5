"""Command-line surface: single entries, tables, sequences, exact ratio
tables, and the verification suites.

Exit status is 0 on success (including an all-pass verification), 1 when a
verification suite fails, and 2 on usage errors. All counts are printed as
exact decimal strings; output is byte-identical across runs except for the
`elapsed` field of verification reports.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .counting import DEFAULT_ENUMERATION_CAP, syt_count_hlf, syt_enumerate
from .gamma import DEFINITIONAL, RECURRENCE, build_table, gamma_def, gamma_rec
from .sequences import ratio_decomposition, ratio_table, tau
from .shapes import ColumnShape
from .verify import SUITE_NAMES, run_suite

USAGE_ERROR = 2

_TABLE_METHODS = {"definition": DEFINITIONAL, "recurrence": RECURRENCE}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sytcount",
        description="Exact counting of standard Young tableaux with a "
                    "bounded number of columns.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_tau = sub.add_parser("tau", help="totals: tableaux with n cells, at most s columns")
    p_tau.add_argument("--columns", type=int, required=True, metavar="S")
    p_tau.add_argument("--cells", type=int, metavar="N")
    p_tau.add_argument("--max-cells", type=int, metavar="N")
    p_tau.add_argument("--method", choices=("definition", "recurrence", "closed"),
                       default="definition")
    p_tau.add_argument("--format", choices=("csv", "json"), default="csv")
    p_tau.add_argument("--out", metavar="FILE")
    p_tau.set_defaults(handler=_cmd_tau)

    p_gamma = sub.add_parser("gamma", help="one table entry (n cells, difference i)")
    p_gamma.add_argument("--columns", type=int, required=True, metavar="S")
    p_gamma.add_argument("--cells", type=int, required=True, metavar="N")
    p_gamma.add_argument("--diff", type=int, required=True, metavar="I")
    p_gamma.add_argument("--method", choices=("definition", "recurrence"),
                         default="definition")
    p_gamma.add_argument("--out", metavar="FILE")
    p_gamma.set_defaults(handler=_cmd_gamma)

    p_table = sub.add_parser("table", help="full triangular table up to a cell count")
    p_table.add_argument("--columns", type=int, required=True, metavar="S")
    p_table.add_argument("--max-cells", type=int, required=True, metavar="N")
    p_table.add_argument("--method", choices=("definition", "recurrence"),
                         default="definition")
    p_table.add_argument("--format", choices=("csv", "json"), default="csv")
    p_table.add_argument("--out", metavar="FILE")
    p_table.set_defaults(handler=_cmd_table)

    p_hook = sub.add_parser("hook", help="count fillings of one shape by hook lengths")
    p_hook.add_argument("--shape", required=True, metavar="COLS",
                        help='comma-separated column lengths, e.g. "4,2,1"')
    p_hook.add_argument("--out", metavar="FILE")
    p_hook.set_defaults(handler=_cmd_hook)

    p_oracle = sub.add_parser("oracle",
                              help="count fillings of one shape by explicit listing")
    p_oracle.add_argument("--shape", required=True, metavar="COLS")
    p_oracle.add_argument("--oracle-cap", type=int, default=DEFAULT_ENUMERATION_CAP,
                          metavar="CELLS", help="enumeration safety cap (default 16)")
    p_oracle.add_argument("--out", metavar="FILE")
    p_oracle.set_defaults(handler=_cmd_oracle)

    p_ratio = sub.add_parser("ratio", help="exact consecutive-totals ratio table")
    p_ratio.add_argument("--columns", type=int, required=True, metavar="S")
    p_ratio.add_argument("--max-cells", type=int, required=True, metavar="N")
    p_ratio.add_argument("--decompose", action="store_true",
                         help="add the three deficit shares (width 3 only)")
    p_ratio.add_argument("--format", choices=("csv", "json"), default="csv")
    p_ratio.add_argument("--out", metavar="FILE")
    p_ratio.set_defaults(handler=_cmd_ratio)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("--suite", choices=SUITE_NAMES, default="all")
    p_verify.add_argument("--max-cells", type=int, metavar="N",
                          help="clip suite ranges to this cell count")
    p_verify.add_argument("--oracle-cap", type=int, metavar="CELLS")
    p_verify.add_argument("--format", choices=("csv", "json"), default="json")
    p_verify.add_argument("--out", metavar="FILE")
    p_verify.set_defaults(handler=_cmd_verify)

    return parser


def _parse_shape(parser: argparse.ArgumentParser, text: str) -> ColumnShape:
    try:
        return ColumnShape.from_text(text)
    except ValueError as exc:
        parser.error(f"--shape: {exc}")
        raise AssertionError  # unreachable; parser.error exits


def _cmd_tau(args, parser) -> tuple[str, int]:
    if (args.cells is None) == (args.max_cells is None):
        parser.error("tau needs exactly one of --cells or --max-cells")
    if args.method == "closed" and args.columns not in (2, 3):
        parser.error("--method closed is only available for --columns 2 or 3")
    if args.columns < 2:
        parser.error("--columns must be at least 2")
    if args.cells is not None:
        if args.cells < 0:
            parser.error("--cells must be >= 0")
        return str(tau(args.columns, args.cells, args.method)), 0
    if args.max_cells < 0:
        parser.error("--max-cells must be >= 0")
    values = [(n, tau(args.columns, n, args.method)) for n in range(args.max_cells + 1)]
    if args.format == "json":
        payload = {"s": args.columns, "method": args.method,
                   "values": [{"n": n, "value": str(v)} for n, v in values]}
        return json.dumps(payload, indent=2), 0
    lines = ["n,value"] + [f"{n},{v}" for n, v in values]
    return "\n".join(lines), 0


def _cmd_gamma(args, parser) -> tuple[str, int]:
    if args.columns < 3:
        parser.error("--columns must be at least 3 (use table --columns 2 for "
                     "the two-column triangle)")
    if args.cells < 0 or args.diff < 0:
        parser.error("--cells and --diff must be >= 0")
    entry = gamma_def if args.method == "definition" else gamma_rec
    return str(entry(args.columns, args.cells, args.diff)), 0


def _cmd_table(args, parser) -> tuple[str, int]:
    if args.columns < 2:
        parser.error("--columns must be at least 2")
    if args.max_cells < 0:
        parser.error("--max-cells must be >= 0")
    table = build_table(args.columns, args.max_cells, _TABLE_METHODS[args.method])
    if args.format == "json":
        return json.dumps(table.to_json_obj(), indent=2), 0
    return table.to_csv_text(), 0


def _cmd_hook(args, parser) -> tuple[str, int]:
    shape = _parse_shape(parser, args.shape)
    return str(syt_count_hlf(shape)), 0


def _cmd_oracle(args, parser) -> tuple[str, int]:
    shape = _parse_shape(parser, args.shape)
    try:
        count = sum(1 for _ in syt_enumerate(shape, cap=args.oracle_cap))
    except ValueError as exc:
        parser.error(f"--shape: {exc} (raise --oracle-cap to override)")
        raise AssertionError
    return str(count), 0


def _cmd_ratio(args, parser) -> tuple[str, int]:
    if args.columns < 2:
        parser.error("--columns must be at least 2")
    if args.max_cells < 1:
        parser.error("--max-cells must be >= 1")
    if args.decompose and args.columns != 3:
        parser.error("--decompose is only defined for --columns 3")
    rows = ratio_table(args.columns, args.max_cells)
    parts = {}
    if args.decompose:
        parts = {n: ratio_decomposition(n) for n in range(3, args.max_cells + 1)}

    if args.format == "json":
        payload_rows = []
        for row in rows:
            entry = {"n": row.n, "numerator": str(row.value.numerator),
                     "denominator": str(row.value.denominator), "approx": row.approx}
            if args.decompose and row.n in parts:
                p = parts[row.n]
                entry["decomposition"] = {
                    "parity": _fraction_obj(p.parity),
                    "gamma0": _fraction_obj(p.gamma0),
                    "correction": _fraction_obj(p.correction),
                }
            payload_rows.append(entry)
        return json.dumps({"s": args.columns, "rows": payload_rows}, indent=2), 0

    header = "n,numerator,denominator,approx"
    if args.decompose:
        header += (",parity_num,parity_den,gamma0_num,gamma0_den,"
                   "correction_num,correction_den")
    lines = [header]
    for row in rows:
        line = f"{row.n},{row.value.numerator},{row.value.denominator},{row.approx}"
        if args.decompose:
            if row.n in parts:
                p = parts[row.n]
                line += (f",{p.parity.numerator},{p.parity.denominator}"
                         f",{p.gamma0.numerator},{p.gamma0.denominator}"
                         f",{p.correction.numerator},{p.correction.denominator}")
            else:
                line += "," * 6
        lines.append(line)
    return "\n".join(lines), 0


def _fraction_obj(value) -> dict:
    return {"numerator": str(value.numerator), "denominator": str(value.denominator)}


def _cmd_verify(args, parser) -> tuple[str, int]:
    if args.max_cells is not None and args.max_cells < 0:
        parser.error("--max-cells must be >= 0")
    report = run_suite(args.suite, max_cells=args.max_cells,
                       oracle_cap=args.oracle_cap)
    text = report.to_json() if args.format == "json" else report.to_csv_text()
    return text, 0 if report.overall else 1


def run(argv: Sequence[str] | None = None) -> int:
    """Parse argv, execute the requested subcommand, and return the exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        text, status = args.handler(args, parser)
    except SystemExit as exc:  # argparse reports usage errors itself
        code = exc.code
        return code if isinstance(code, int) else USAGE_ERROR
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")
    return status


def main(argv: Sequence[str] | None = None) -> int:
    return run(argv)


if __name__ == "__main__":
    raise SystemExit(main())
