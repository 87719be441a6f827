import csv
import io
import json
import math
import re
import xml.etree.ElementTree as ET
from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import rational_ratios
from goldenrect.errors import DomainError
from goldenrect.exactnum import PHI, GoldenNumber, parse_golden
from goldenrect.measures import measure_report
from goldenrect.render import CSV_COLUMNS, RenderOptions, emit_report, emit_svg
from goldenrect.subdivision import layout, square_capacity

SVG = "{http://www.w3.org/2000/svg}"
ARC_RE = re.compile(r"M (\S+) (\S+) A (\S+) (\S+) 0 0 1 (\S+) (\S+)")


def parse(svg: str):
    return ET.fromstring(svg.encode("utf-8"))


def arcs(root):
    out = []
    for el in root.iter(f"{SVG}path"):
        sx, sy, rx, ry, ex, ey = map(float, ARC_RE.fullmatch(el.get("d")).groups())
        assert rx == ry
        out.append(((sx, sy), rx, (ex, ey)))
    return out


def test_golden_eight_steps():
    root = parse(emit_svg(layout(PHI, 1, 8)))
    squares = [el for el in root.iter(f"{SVG}rect") if el.get("class") == "square"]
    assert len(squares) == 8
    assert len(arcs(root)) == 8
    assert len([el for el in root.iter(f"{SVG}rect") if el.get("class") == "residual"]) == 1


def test_exact_tiling_omits_residual():
    root = parse(emit_svg(layout(Fraction(3, 2), 1, 3)))
    classes = [el.get("class") for el in root.iter(f"{SVG}rect")]
    assert classes.count("square") == 3
    assert "residual" not in classes


def test_second_square_ratio():
    root = parse(emit_svg(layout(PHI, 1, 2)))
    w = [float(el.get("width")) for el in root.iter(f"{SVG}rect") if el.get("class") == "square"]
    assert abs(w[1] / w[0] - 0.618034) <= 1e-6


def test_arc_endpoints_track_exact_geometry():
    trace = layout(PHI, 1, 8)
    opts = RenderOptions()
    scale = opts.width_px / float(trace.width)
    rendered = arcs(parse(emit_svg(trace, opts)))
    for step, ((sx, sy), r, (ex, ey)) in zip(trace.steps, rendered):
        (esx, esy), (eex, eey) = step.arc.start, step.arc.end
        assert abs(sx - float(esx) * scale) <= 1e-6
        assert abs(sy - (1 - float(esy)) * scale) <= 1e-6
        assert abs(ex - float(eex) * scale) <= 1e-6
        assert abs(ey - (1 - float(eey)) * scale) <= 1e-6
        assert abs(r - float(step.side) * scale) <= 1e-6
    for (_, _, end), (start, _, _) in zip(rendered, rendered[1:]):
        assert end == start


def test_sweep_matches_exact_centres():
    # of the two circles through the endpoints, sweep-flag 1 with the small arc
    # picks the one whose centre lies to the right of start -> end in screen space
    trace = layout(PHI, 1, 8)
    scale = 800 / float(trace.width)
    for step, ((sx, sy), r, (ex, ey)) in zip(trace.steps, arcs(parse(emit_svg(trace)))):
        mx, my = (sx + ex) / 2, (sy + ey) / 2
        dx, dy = ex - sx, ey - sy
        half = math.hypot(dx, dy) / 2
        h = math.sqrt(max(r * r - half * half, 0.0))
        # right-hand normal in y-down coordinates is (-dy, dx)
        nx, ny = -dy / (2 * half), dx / (2 * half)
        cx, cy = mx + h * nx, my + h * ny
        ecx, ecy = step.arc.center
        assert abs(cx - float(ecx) * scale) <= 1e-6
        assert abs(cy - (1 - float(ecy)) * scale) <= 1e-6


def _coords(root):
    for el in root.iter():
        for attr in ("x", "y", "width", "height"):
            if el.get(attr) is not None:
                yield attr, float(el.get(attr))
        if el.get("d"):
            for v in ARC_RE.fullmatch(el.get("d")).groups():
                yield "d", float(v)


@given(rational_ratios)
@settings(max_examples=30, deadline=None)
def test_coordinates_within_viewbox(m):
    root = parse(emit_svg(layout(m, 1, square_capacity(m))))
    _, _, vw, vh = map(float, root.get("viewBox").split())
    for name, v in _coords(root):
        assert math.isfinite(v)
        assert -1e-9 <= v <= max(vw, vh) + 1e-9, name


def test_svg_is_deterministic():
    a = emit_svg(layout(PHI, 1, 8), RenderOptions(show_labels=True))
    b = emit_svg(layout(PHI, 1, 8), RenderOptions(show_labels=True))
    assert a == b
    parse(a)


@pytest.mark.parametrize("kwargs", [{"width_px": 10}, {"float_digits": 3}])
def test_render_options_validated(kwargs):
    with pytest.raises(ValueError):
        RenderOptions(**kwargs)


def test_empty_trace_rejected():
    t = layout(PHI, 1, 1)
    empty = type(t)(t.m, t.b, t.xs[:1], (), t.residual, False)
    with pytest.raises(DomainError):
        emit_svg(empty)


# -- reports ----------------------------------------------------------------


def test_csv_first_row():
    rep = measure_report(layout(PHI, 1, 4))
    rows = list(csv.DictReader(io.StringIO(emit_report(rep, "csv"))))
    assert list(rows[0]) == CSV_COLUMNS
    assert rows[0]["L_float"] == "1.570796"
    assert rows[0]["L_exact"] == "0; 1/2; 0"
    assert len(rows) == 4


def test_csv_header_only_when_no_steps():
    rep = measure_report(layout(PHI, 1, 3))
    empty = type(rep)(rep.trace, (), rep.cumulative, rep.closed_form, rep.deviation)
    text = emit_report(empty, "csv")
    assert text == ",".join(CSV_COLUMNS) + "\r\n"


def test_json_deviation_zero_and_lossless():
    trace = layout(Fraction(89, 55), GoldenNumber(Fraction(3, 2)), 9)
    doc = json.loads(emit_report(measure_report(trace), "json"))
    for name, block in doc["deviation"].items():
        assert (block["u"], block["v"], block["w"]) == ("0", "0", "0"), name
        assert block["float"] == "0"
    sides = [parse_golden(row["x_prev"]) for row in doc["per_step"]]
    assert sides == [s.side for s in trace.steps]
    assert [parse_golden(x) for x in doc["xs"]] == list(trace.xs)
    L = doc["cumulative"]["L"]
    assert parse_golden(L["v"]) * 2 == sum(sides, GoldenNumber(0))


def test_report_format_checked():
    with pytest.raises(ValueError):
        emit_report(measure_report(layout(PHI, 1, 2)), "xml")


def test_reports_are_deterministic():
    rep = measure_report(layout(PHI, 1, 6))
    assert emit_report(rep, "json") == emit_report(rep, "json")
    assert emit_report(rep, "csv") == emit_report(rep, "csv")
