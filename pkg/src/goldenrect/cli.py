"""Command-line front end.

    goldenrect subdivide  --ratio R [--steps N] [--side B]
    goldenrect measures   --ratio R [--steps N] [--side B] [--format csv|json]
    goldenrect limits     [--side B]
    goldenrect identities [--max-n N] [--format json|text]
    goldenrect render     --ratio R [--steps N] --out FILE.svg [--width PX] [--side B]

Exit status: 0 success, 1 usage error, 2 domain error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from typing import Optional, Sequence, TextIO

from . import errata
from .errors import DomainError, RatioOutOfRange, RatioSyntaxError
from .exactnum import PHI, GoldenNumber, SpiralMeasure, gn_to_float, parse_golden
from .measures import golden_totals, measure_report, pi_phi_check
from .render import RenderOptions, emit_report, emit_svg
from .subdivision import aureness_degree, layout, square_capacity, x_sequence

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2
FLOAT_DIGITS = 12


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def parse_ratio(text: str) -> GoldenNumber:
    """Parse a ratio and require 1 < m <= 2."""
    m = parse_golden(text)
    if not (m > 1 and m <= 2):
        raise RatioOutOfRange(f"ratio {text!r} = {m} is outside (1, 2]")
    return m


def _side(text: str) -> GoldenNumber:
    b = parse_golden(text)
    if b.sign() <= 0:
        raise DomainError(f"side {text!r} must be positive")
    return b


def _resolve_steps(m: GoldenNumber, steps: Optional[int]) -> int:
    cap = square_capacity(m)
    if steps is None:
        if cap is None:
            raise UsageError("--steps is required for the golden ratio (the subdivision never ends)")
        return cap
    if steps < 1:
        raise UsageError(f"--steps must be >= 1, got {steps}")
    return steps


def _build_parser() -> _Parser:
    p = _Parser(prog="goldenrect", description="Exact golden-rectangle subdivision and spiral measures.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("subdivide", help="x-sequence and aureness degree")
    s.add_argument("--ratio", required=True)
    s.add_argument("--steps", type=int)
    s.add_argument("--side", default="1")

    s = sub.add_parser("measures", help="per-step and cumulative spiral measures")
    s.add_argument("--ratio", required=True)
    s.add_argument("--steps", type=int)
    s.add_argument("--side", default="1")
    s.add_argument("--format", choices=("csv", "json"), default="csv")

    s = sub.add_parser("limits", help="golden totals and the pi/phi^2 check")
    s.add_argument("--side", default="1")

    s = sub.add_parser("identities", help="brute-force verdicts for the Fibonacci/phi identities")
    s.add_argument("--max-n", type=int, default=25)
    s.add_argument("--format", choices=("json", "text"), default="json")

    s = sub.add_parser("render", help="write the subdivision and spiral as SVG")
    s.add_argument("--ratio", required=True)
    s.add_argument("--steps", type=int)
    s.add_argument("--side", default="1")
    s.add_argument("--out", required=True)
    s.add_argument("--width", type=int, default=800)
    s.add_argument("--labels", action="store_true")
    return p


def _fl(x: GoldenNumber) -> str:
    return gn_to_float(x, FLOAT_DIGITS)


def _cmd_subdivide(args, out: TextIO) -> None:
    m, b = parse_ratio(args.ratio), _side(args.side)
    cls = aureness_degree(m)
    if cls.golden and args.steps is None:
        raise UsageError("--steps is required for the golden ratio (the subdivision never ends)")
    steps = args.steps if args.steps is not None else cls.degree
    if steps < 1:
        raise UsageError(f"--steps must be >= 1, got {steps}")
    xs = x_sequence(m, b, steps)
    out.write(f"ratio: {m} ({_fl(m)})\n")
    out.write(f"side: {b} ({_fl(b)})\n")
    out.write(f"class: {cls}\n")
    out.write(f"degree: {'infinite' if cls.golden else cls.degree}\n")
    cap = square_capacity(m)
    if cap is not None:
        out.write(f"squares: {cap}\n")
    out.write(f"x-sequence: {', '.join(str(x) for x in xs)}\n")
    out.write("k\tx_k\tx_k_float\n")
    for k, x in enumerate(xs):
        out.write(f"{k}\t{x}\t{_fl(x)}\n")


def _cmd_measures(args, out: TextIO) -> None:
    m, b = parse_ratio(args.ratio), _side(args.side)
    steps = _resolve_steps(m, args.steps)
    report = measure_report(layout(m, b, steps))
    out.write(emit_report(report, args.format))


def _measure_line(name: str, value: SpiralMeasure) -> str:
    return f"{name} = {value} = {value.evaluate(FLOAT_DIGITS)}"


def _cmd_limits(args, out: TextIO) -> None:
    b = _side(args.side)
    totals = golden_totals(b)
    out.write(f"golden totals for side b = {b} (ratio phi)\n")
    for name, value in totals.items():
        out.write(f"  {_measure_line(name, value)}\n")
    rep = pi_phi_check()
    out.write("pi / phi^2 check (30 digits)\n")
    out.write(f"  pi/phi^2 = {rep.ratio} = {rep.ratio_text}\n")
    out.write(f"  pi/phi^2 - 6/5 = {rep.gap_to_six_fifths} = {rep.gap_text}\n")
    out.write(f"  phi = {PHI} = {rep.phi_text}\n")
    out.write(f"  sqrt(5 pi / 6) = {rep.sqrt_5pi_over_6} (approximation; agrees with phi to {rep.agreeing_decimals} decimals)\n")


def _cmd_identities(args, out: TextIO) -> None:
    if args.max_n < 1:
        raise UsageError(f"--max-n must be >= 1, got {args.max_n}")
    doc = errata.collect(args.max_n)
    if args.format == "json":
        out.write(json.dumps(doc, indent=2) + "\n")
        return
    out.write(f"identities checked for n = 1..{args.max_n}\n")
    for row in doc["identities"]:
        lo, hi = row["checked_n"]
        line = f"{row['id']:>3}  {row['printed']:<14} {row['status']:<14} n={lo}..{hi}  {row['printed_form']}"
        out.write(line + "\n")
        if row["corrected_form"]:
            out.write(f"{'':>5}corrected: {row['corrected_form']}\n")
    out.write("other claims\n")
    for c in doc["claims"]:
        out.write(f"     {c['printed_status']:<14} {c['status']:<14} {c['printed']}\n")
        if c["corrected"]:
            out.write(f"{'':>5}corrected: {c['corrected']}\n")
    out.write(f"errata: {len(doc['errata'])} printed statements fail\n")


def _write_atomic(path: str, text: str) -> None:
    target = os.path.abspath(path)
    fd, tmp = tempfile.mkstemp(dir=os.path.dirname(target), prefix=".goldenrect-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, target)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _cmd_render(args, out: TextIO) -> None:
    m, b = parse_ratio(args.ratio), _side(args.side)
    steps = _resolve_steps(m, args.steps)
    try:
        opts = RenderOptions(width_px=args.width, show_labels=args.labels)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    svg = emit_svg(layout(m, b, steps), opts)
    _write_atomic(args.out, svg)
    out.write(f"wrote {args.out} ({steps} squares)\n")


_COMMANDS = {
    "subdivide": _cmd_subdivide,
    "measures": _cmd_measures,
    "limits": _cmd_limits,
    "identities": _cmd_identities,
    "render": _cmd_render,
}


def run(argv: Optional[Sequence[str]] = None, stdout: TextIO = None, stderr: TextIO = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = _build_parser().parse_args(argv)
        _COMMANDS[args.command](args, stdout)
    except (UsageError, RatioSyntaxError) as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except DomainError as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_DOMAIN
    except SystemExit as exc:
        # --help
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
