"""Command-line front end.

Exit status: 0 on success, 1 on usage or I/O errors, 2 when a numerical
check fails or an evaluation hits a pole.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from typing import Any

from . import core, ramanujan
from .errors import DomainError
from .verification import Report, run_verification

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FAILED = 2

VERBS = ("eval", "periods", "critical", "poles", "ramanujan", "verify", "table")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _fmt(x: float) -> str:
    return format(x + 0.0, ".17g")


def to_json(obj: Any) -> str:
    """Serialise with 17 significant digits per float, keys in insertion order."""
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if obj is None:
        return "null"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        if not math.isfinite(obj):
            return "null"
        text = _fmt(obj)
        # keep the value a float when parsed back
        return text if any(ch in text for ch in ".en") else text + ".0"
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{to_json(str(k))}: {to_json(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(to_json(v) for v in obj) + "]"
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def _cell(v: Any) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return _fmt(v)
    return str(v)


def to_csv(header: list[str], rows: list[list[Any]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_cell(v) for v in row])
    return buf.getvalue()


def format_output(result: dict, fmt: str) -> str:
    """Render a result from :func:`run` as JSON or CSV text.

    CSV uses the ``rows`` or ``entries`` table when present, otherwise a
    single row holding the scalar fields.
    """
    if fmt == "json":
        return to_json(result) + "\n"
    table = next((key for key in ("rows", "entries") if key in result), None)
    if table is not None:
        rows = result[table]
        header = list(rows[0]) if rows else list(result.get("columns", []))
        return to_csv(header, [list(r.values()) for r in rows])
    scalars = {k: v for k, v in result.items() if not isinstance(v, (list, dict))}
    return to_csv(list(scalars), [list(scalars.values())])


def report_to_dict(kappa2: float, report: Report) -> dict:
    rows = [
        {"name": e.name, "expected": e.expected, "actual": e.actual,
         "residual": e.residual, "tolerance": e.tolerance, "pass": e.passed}
        for e in report.entries
    ]
    return {"kappa2": kappa2, "overall": report.overall, "columns":
            ["name", "expected", "actual", "residual", "tolerance", "pass"], "entries": rows}


def _require(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"{args.verb} requires --{name}")
    if args.kappa2 is not None and not 0 < args.kappa2 < 1:
        raise UsageError(f"--kappa2 must lie in (0, 1), got {args.kappa2}")
    if args.p is not None and not 0 < args.p < 1:
        raise UsageError(f"--p must lie in (0, 1), got {args.p}")


def run(args: argparse.Namespace) -> tuple[dict, bool]:
    """Dispatch one command; returns the result and whether it counts as a pass."""
    verb = args.verb
    if verb == "ramanujan":
        _require(args, "p")
    elif verb == "eval":
        _require(args, "kappa2", "u")
    else:
        _require(args, "kappa2")

    if verb == "verify":
        report = run_verification(args.kappa2, args.grid)
        return report_to_dict(args.kappa2, report), report.overall

    if verb == "ramanujan":
        pp = ramanujan.ramanujan_maps(args.p)
        lhs, rhs, resid = ramanujan.verify_identity(args.p, p_max=1.0)
        return {"p": args.p, "angle_a": pp.angle_a, "beta": pp.beta, "alpha": pp.alpha_r,
                "multiplier": pp.multiplier, "lhs": lhs, "rhs": rhs, "residual": resid}, True

    mod = core.Modulus.from_kappa2(args.kappa2)

    if verb == "eval":
        u = complex(*args.u) if len(args.u) == 2 else complex(args.u[0])
        out = {"kappa2": args.kappa2, "u_re": u.real, "u_im": u.imag, "route": args.route}
        if args.route in ("direct", "both"):
            if u.imag != 0.0:
                raise UsageError("the direct route is only defined for real u")
            out["dn3_direct"] = core.dn3_direct(u.real, mod)
        if args.route in ("wp", "both"):
            w = core.dn3_wp(u, mod)
            out["dn3_wp_re"] = w.real
            out["dn3_wp_im"] = w.imag
        if args.route == "both":
            out["abs_diff"] = abs(out["dn3_direct"] - w)
        return out, True

    if verb == "periods":
        geo = core.periods_via_greenhill(mod)
        gd = core.greenhill_data(mod)
        return {"kappa2": args.kappa2, "K": geo.K, "Kp": geo.Kp, "M2": gd.M2, "k2": gd.k2,
                "kp2": gd.kp2, "pole_height": geo.pole_height,
                "band_halfwidth": geo.band_halfwidth}, True

    if verb == "critical":
        cv = core.critical_values(mod)
        e1, e2, e3 = core.midpoint_wp_values(mod)
        inv = mod.invariants
        return {"kappa2": args.kappa2, "angle_a": mod.angle_a, "x1": cv.x1, "x2": cv.x2,
                "x3": cv.x3, "g2": inv.g2, "g3": inv.g3, "e1": e1, "e2": e2, "e3": e3}, True

    if verb == "poles":
        n_cells = max(args.grid, 1)
        geo = core.periods_via_greenhill(mod)
        rows = [{"re": p.real, "im": p.imag} for p in core.pole_locations(mod, n_cells)]
        return {"kappa2": args.kappa2, "pole_height": geo.pole_height, "n_cells": n_cells,
                "columns": ["re", "im"], "rows": rows}, True

    if verb == "table":
        K = mod.lattice.K
        n = args.grid
        rows = []
        for i in range(n):
            u = 2.0 * K * i / (n - 1) if n > 1 else 0.0
            w = core.dn3_wp(u, mod)
            rows.append({"u": u, "dn3_direct": core.dn3_direct(u, mod),
                         "dn3_wp_re": w.real, "dn3_wp_im": w.imag})
        return {"kappa2": args.kappa2, "columns": ["u", "dn3_direct", "dn3_wp_re", "dn3_wp_im"],
                "rows": rows}, True

    raise UsageError(f"unknown verb {verb!r}")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--kappa2", type=float, help="squared modulus in (0, 1)")
    common.add_argument("--p", type=float, help="Ramanujan parameter in (0, 1)")
    common.add_argument("--u", type=float, nargs="+", metavar=("RE", "IM"),
                        help="evaluation point: real part and optional imaginary part")
    common.add_argument("--route", choices=("direct", "wp", "both"), default="both")
    common.add_argument("--grid", type=int, default=None,
                        help="grid size (verify: real samples, table: rows, poles: cells)")
    common.add_argument("--format", dest="fmt", choices=("json", "csv"), default="json")
    common.add_argument("--out", dest="out_path", help="write output here instead of stdout")

    parser = _Parser(prog="shen-dn3", description="Signature-three elliptic function dn3.")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)
    for verb in VERBS:
        sub.add_parser(verb, parents=[common])
    return parser


_DEFAULT_GRID = {"verify": 100, "table": 11, "poles": 1}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.grid is None:
        args.grid = _DEFAULT_GRID.get(args.verb, 0)
    if args.grid < 0:
        parser.error("--grid must be non-negative")
    if args.u is not None and len(args.u) > 2:
        parser.error("--u takes at most two numbers")

    try:
        result, passed = run(args)
    except (UsageError, DomainError) as exc:
        print(f"shen-dn3: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ArithmeticError as exc:
        print(f"shen-dn3: numerical failure: {exc}", file=sys.stderr)
        return EXIT_FAILED

    text = format_output(result, args.fmt)
    if args.out_path:
        try:
            with open(args.out_path, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"shen-dn3: cannot write {args.out_path}: {exc}", file=sys.stderr)
            return EXIT_USAGE
    else:
        sys.stdout.write(text)
    return EXIT_OK if passed else EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
