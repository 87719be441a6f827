"""Exact golden-rectangle subdivision, quarter-arc spiral measures and
Fibonacci identity checks."""
from .exactnum import (
    PHI,
    PHI_BAR,
    GoldenNumber,
    SpiralMeasure,
    gn_phi_pow,
    gn_sign,
    gn_to_float,
    measure_eval,
    parse_golden,
)
from .fibonacci import convergent, fib, identity_check, lucas, tau
from .measures import (
    closed_form_A,
    closed_form_B,
    closed_form_L,
    cumulative,
    derive_C,
    derive_D,
    golden_totals,
    measure_report,
    pi_phi_check,
    step_measures,
)
from .render import RenderOptions, emit_report, emit_svg
from .subdivision import aureness_degree, layout, square_capacity, x_sequence

__version__ = "0.1.0"
