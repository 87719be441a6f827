"""SVG drawing of a subdivision, and CSV/JSON emission of measure reports."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from xml.sax.saxutils import escape

from .errors import DomainError
from .exactnum import GoldenNumber, SpiralMeasure
from .measures import MEASURE_NAMES, MeasureReport, StepMeasures
from .subdivision import SubdivisionTrace


@dataclass(frozen=True)
class Palette:
    square: str = "#9fc2e7"  # blue: square minus quarter disc
    quarter_disc: str = "#f4d35e"  # yellow
    residual: str = "#9b72cf"  # purple
    arc: str = "#1d1d1d"
    outline: str = "#1d1d1d"


@dataclass(frozen=True)
class RenderOptions:
    width_px: int = 800
    palette: Palette = field(default_factory=Palette)
    show_arcs: bool = True
    show_labels: bool = False
    float_digits: int = 6

    def __post_init__(self):
        if self.width_px < 64:
            raise ValueError(f"width_px must be >= 64, got {self.width_px}")
        if self.float_digits < 6:
            raise ValueError(f"float_digits must be >= 6, got {self.float_digits}")


def _num(value: float, digits: int) -> str:
    text = f"{value:.{digits}f}".rstrip("0").rstrip(".")
    return "0" if text in ("", "-0") else text


class _Canvas:
    """Maps exact rectangle coordinates (y up) to pixels (y down)."""

    def __init__(self, trace: SubdivisionTrace, opts: RenderOptions):
        self.opts = opts
        self.width = trace.width
        self.b = trace.b
        self.digits = opts.float_digits

    def scale(self, length: GoldenNumber) -> float:
        return float(length / self.width) * self.opts.width_px

    def x(self, x: GoldenNumber) -> float:
        return self.scale(x)

    def y(self, y: GoldenNumber) -> float:
        return self.scale(self.b - y)

    def fmt(self, v: float) -> str:
        return _num(v, self.digits)


def emit_svg(trace: SubdivisionTrace, opts: RenderOptions | None = None) -> str:
    opts = opts or RenderOptions()
    if not trace.steps:
        raise DomainError("cannot render a trace with no steps")
    cv = _Canvas(trace, opts)
    f = cv.fmt
    pal = opts.palette
    w, h = f(cv.scale(trace.width)), f(cv.scale(trace.b))

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{w}" height="{h}" viewBox="0 0 {w} {h}">',
        f"  <title>{_title(trace)}</title>",
        '  <g class="squares">',
    ]
    for st in trace.steps:
        ox, oy = st.origin
        out.append(
            f'    <rect class="square" data-k="{st.k}" x="{f(cv.x(ox))}" y="{f(cv.y(oy + st.side))}" '
            f'width="{f(cv.scale(st.side))}" height="{f(cv.scale(st.side))}" '
            f'fill="{pal.square}" stroke="{pal.outline}" stroke-width="0.5"/>'
        )
    out.append("  </g>")

    res = trace.residual
    if res.area:
        out.append(
            f'  <rect class="residual" x="{f(cv.x(res.x))}" y="{f(cv.y(res.y + res.height))}" '
            f'width="{f(cv.scale(res.width))}" height="{f(cv.scale(res.height))}" '
            f'fill="{pal.residual}" stroke="{pal.outline}" stroke-width="0.5"/>'
        )

    if opts.show_arcs:
        out.append('  <g class="arcs" fill="none">')
        for st in trace.steps:
            (sx, sy), (ex, ey) = st.arc.start, st.arc.end
            r = f(cv.scale(st.arc.radius))
            # clockwise in y-up coordinates is sweep-flag 1 once y points down
            out.append(
                f'    <path class="arc" data-k="{st.k}" '
                f'd="M {f(cv.x(sx))} {f(cv.y(sy))} A {r} {r} 0 0 1 {f(cv.x(ex))} {f(cv.y(ey))}" '
                f'stroke="{pal.arc}" stroke-width="1.5"/>'
            )
        out.append("  </g>")

    if opts.show_labels:
        out.append('  <g class="labels" font-family="sans-serif" text-anchor="middle">')
        for st in trace.steps:
            ox, oy = st.origin
            half = st.side / 2
            size = f(max(cv.scale(st.side) / 4, 1.0))
            out.append(
                f'    <text x="{f(cv.x(ox + half))}" y="{f(cv.y(oy + half))}" font-size="{size}" '
                f'dominant-baseline="middle">{st.k}</text>'
            )
        out.append("  </g>")

    out.append(
        f'  <rect class="outline" x="0" y="0" width="{w}" height="{h}" '
        f'fill="none" stroke="{pal.outline}" stroke-width="1"/>'
    )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _title(trace: SubdivisionTrace) -> str:
    return escape(f"ratio {trace.m}, side {trace.b}, {len(trace.steps)} squares")


# ---------------------------------------------------------------------------
# reports


def _triple(m: SpiralMeasure) -> str:
    return "; ".join(m.exact())


def _measure_json(m: SpiralMeasure, digits: int) -> dict:
    u, v, w = m.exact()
    return {"u": u, "v": v, "w": w, "float": m.evaluate(digits)}


def _block(sm: StepMeasures, digits: int) -> dict:
    return {name: _measure_json(value, digits) for name, value in sm.items()}


CSV_COLUMNS = ["k", "x_prev", "x_prev_float"] + [
    col for name in MEASURE_NAMES for col in (f"{name}_exact", f"{name}_float")
]


def emit_report(report: MeasureReport, format: str = "csv", float_digits: int = 7) -> str:
    """Serialise a report; exact values are lossless ``r + s*phi`` strings."""
    if format == "csv":
        return _report_csv(report, float_digits)
    if format == "json":
        return _report_json(report, float_digits)
    raise ValueError(f"unknown report format {format!r}; expected 'csv' or 'json'")


def _report_csv(report: MeasureReport, digits: int) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\r\n")
    writer.writerow(CSV_COLUMNS)
    xs = report.trace.xs
    for sm in report.per_step:
        x_prev = xs[sm.k - 1]
        row = [sm.k, str(x_prev), SpiralMeasure(u=x_prev).evaluate(digits)]
        for _, value in sm.items():
            row += [_triple(value), value.evaluate(digits)]
        writer.writerow(row)
    return buf.getvalue()


def _report_json(report: MeasureReport, digits: int) -> str:
    trace = report.trace
    doc = {
        "ratio": str(trace.m),
        "side": str(trace.b),
        "steps": len(report.per_step),
        "terminated": trace.terminated,
        "exact_tiling": trace.exact_tiling,
        "xs": [str(x) for x in trace.xs],
        "per_step": [
            {"k": sm.k, "x_prev": str(trace.xs[sm.k - 1]), **_block(sm, digits)}
            for sm in report.per_step
        ],
        "cumulative": _block(report.cumulative, digits),
        "closed_form": _block(report.closed_form, digits),
        "deviation": _block(report.deviation, digits),
    }
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
