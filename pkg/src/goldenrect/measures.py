"""Exact spiral measures over a subdivision: per step, cumulative and closed form.

For step k (side x_{k-1}, next residual side x_k):

    L_k = (pi/2) x_{k-1}            quarter arc length
    A_k = (pi/4) x_{k-1}^2          quarter disc area
    B_k = x_{k-1} x_k               residual rectangle area
    C_k = x_{k-1}^2 (1 - pi/4)      square minus quarter disc
    D_k = sqrt2 x_{k-1}             square diagonal

Closed forms are stated for b = 1 and scaled by b (lengths) or b^2 (areas).
With N steps, tau(N) = sum_{k<N} F_k F_{k+1} and sigma(N) = sum_{k<=N} (-1)^k:

    L = (pi/2) [1 + m + (-1)^N (m F_{N-2} - F_{N-1})]
    A = (pi/4) [m^2 F_{N-1} F_N - 2 m tau(N) + F_N F_{N+1}]
    B = -tau(N)(m^2 + 1) + m (2 F_N F_{N+1} + sigma(N)) - F_N F_{N+1}
"""
from __future__ import annotations

from dataclasses import dataclass, field
from decimal import Decimal

import mpmath

from .errors import DomainError, MalformedMeasure
from .exactnum import (
    PHI,
    GoldenNumber,
    Scalar,
    SpiralMeasure,
    as_golden,
    format_significant,
    gn_to_decimal,
)
from .fibonacci import fib, tau_closed
from .subdivision import SubdivisionTrace

MEASURE_NAMES = ("L", "A", "B", "C", "D")


@dataclass(frozen=True)
class StepMeasures:
    k: int
    L: SpiralMeasure = field(default_factory=SpiralMeasure)
    A: SpiralMeasure = field(default_factory=SpiralMeasure)
    B: SpiralMeasure = field(default_factory=SpiralMeasure)
    C: SpiralMeasure = field(default_factory=SpiralMeasure)
    D: SpiralMeasure = field(default_factory=SpiralMeasure)

    def __add__(self, other: "StepMeasures") -> "StepMeasures":
        if not isinstance(other, StepMeasures):
            return NotImplemented
        return StepMeasures(
            max(self.k, other.k),
            *(getattr(self, n) + getattr(other, n) for n in MEASURE_NAMES),
        )

    def __sub__(self, other: "StepMeasures") -> "StepMeasures":
        if not isinstance(other, StepMeasures):
            return NotImplemented
        return StepMeasures(self.k, *(getattr(self, n) - getattr(other, n) for n in MEASURE_NAMES))

    def items(self):
        return [(n, getattr(self, n)) for n in MEASURE_NAMES]

    def is_zero(self) -> bool:
        return not any(m for _, m in self.items())


@dataclass(frozen=True)
class MeasureReport:
    trace: SubdivisionTrace
    per_step: tuple[StepMeasures, ...]
    cumulative: StepMeasures
    closed_form: StepMeasures
    deviation: StepMeasures


def _terms(xp: GoldenNumber, xc: GoldenNumber, k: int) -> StepMeasures:
    sq = xp * xp
    return StepMeasures(
        k,
        L=SpiralMeasure(v=xp / 2),
        A=SpiralMeasure(v=sq / 4),
        B=SpiralMeasure(u=xp * xc),
        C=SpiralMeasure(u=sq, v=-sq / 4),
        D=SpiralMeasure(w=xp),
    )


def step_measures(x_prev: Scalar, x_cur: Scalar, k: int) -> StepMeasures:
    x_prev, x_cur = as_golden(x_prev), as_golden(x_cur)
    if x_prev.sign() <= 0:
        raise DomainError(f"step {k}: square side must be positive, got {x_prev}")
    return _terms(x_prev, x_cur, k)


def _sum_steps(xs, n: int) -> StepMeasures:
    total = StepMeasures(0)
    for k in range(1, n + 1):
        total = total + step_measures(xs[k - 1], xs[k], k)
    return total


def cumulative(trace: SubdivisionTrace, n: int) -> StepMeasures:
    available = len(trace.steps)
    if not 1 <= n <= available:
        raise DomainError(f"n = {n} outside 1..{available} (steps in trace)")
    return _sum_steps(trace.xs, n)


def per_step(trace: SubdivisionTrace) -> list[StepMeasures]:
    return [step_measures(trace.xs[k - 1], trace.xs[k], k) for k in range(1, len(trace.steps) + 1)]


def direct_sums(m: Scalar, n: int, b: Scalar = 1) -> StepMeasures:
    """Brute-force totals over the formal x-sequence, ignoring termination.

    The closed forms are polynomial identities in m, so they are compared
    against this sum for every n, including steps past the last square that
    actually fits.  Terms are summed without the positivity check.
    """
    m, b = as_golden(m), as_golden(b)
    prev, cur = m * b, b
    xs = [cur]
    for _ in range(n):
        prev, cur = cur, prev - cur
        xs.append(cur)
    total = StepMeasures(0)
    for k in range(1, n + 1):
        total = total + _terms(xs[k - 1], xs[k], k)
    return total


def golden_totals(b: Scalar = 1) -> StepMeasures:
    """Infinite-sum totals for the golden rectangle of short side b."""
    b = as_golden(b)
    if b.sign() <= 0:
        raise DomainError(f"side must be positive, got {b}")
    phi2 = PHI * PHI
    bb = b * b
    return StepMeasures(
        0,
        L=SpiralMeasure(v=b * phi2 / 2),
        A=SpiralMeasure(v=bb * PHI / 4),
        B=SpiralMeasure(u=bb),
        C=SpiralMeasure(u=bb * PHI, v=-bb * PHI / 4),
        D=SpiralMeasure(w=b * phi2),
    )


def _check_n(n: int) -> None:
    if n < 2:
        raise DomainError(f"closed forms need n >= 2, got {n}")


def _sigma(n: int) -> int:
    # sum_{k=1}^{n} (-1)^k
    return 0 if n % 2 == 0 else -1


def closed_form_L(m: Scalar, n: int, b: Scalar = 1) -> SpiralMeasure:
    _check_n(n)
    m = as_golden(m)
    sign = 1 if n % 2 == 0 else -1
    bracket = 1 + m + sign * (m * fib(n - 2) - fib(n - 1))
    return SpiralMeasure(v=bracket * as_golden(b) / 2)


def closed_form_A(m: Scalar, n: int, b: Scalar = 1) -> SpiralMeasure:
    _check_n(n)
    m = as_golden(m)
    fn, fn1, fp = fib(n), fib(n + 1), fib(n - 1)
    # tau(n) is F_n^2 for even n, F_n^2 - 1 for odd n
    bracket = m * m * (fp * fn) - 2 * m * tau_closed(n) + fn * fn1
    bb = as_golden(b) * as_golden(b)
    return SpiralMeasure(v=bracket * bb / 4)


def closed_form_B(m: Scalar, n: int, b: Scalar = 1) -> SpiralMeasure:
    _check_n(n)
    m = as_golden(m)
    fn, fn1 = fib(n), fib(n + 1)
    value = -tau_closed(n) * (m * m + 1) + m * (2 * fn * fn1 + _sigma(n)) - fn * fn1
    bb = as_golden(b) * as_golden(b)
    return SpiralMeasure(u=value * bb)


def derive_C(a_total: SpiralMeasure) -> SpiralMeasure:
    """C = (4/pi - 1) A, applied to the pi coefficient."""
    if a_total.u or a_total.w:
        raise MalformedMeasure(f"area total must be a pure pi multiple, got {a_total}")
    return SpiralMeasure(u=4 * a_total.v, v=-a_total.v)


def derive_D(l_total: SpiralMeasure) -> SpiralMeasure:
    """D = (2 sqrt2 / pi) L, applied to the pi coefficient."""
    if l_total.u or l_total.w:
        raise MalformedMeasure(f"length total must be a pure pi multiple, got {l_total}")
    return SpiralMeasure(w=2 * l_total.v)


def closed_forms(m: Scalar, n: int, b: Scalar = 1) -> StepMeasures:
    L = closed_form_L(m, n, b)
    A = closed_form_A(m, n, b)
    return StepMeasures(n, L=L, A=A, B=closed_form_B(m, n, b), C=derive_C(A), D=derive_D(L))


def measure_report(trace: SubdivisionTrace, n: int | None = None) -> MeasureReport:
    n = len(trace.steps) if n is None else n
    steps = tuple(per_step(trace)[:n])
    total = cumulative(trace, n)
    if n >= 2:
        closed = closed_forms(trace.m, n, trace.b)
    else:
        # one step: the sums are the single term itself
        closed = total
    return MeasureReport(trace, steps, total, closed, closed - total)


@dataclass(frozen=True)
class PiPhiReport:
    ratio: SpiralMeasure  # pi / phi^2
    ratio_text: str
    gap_to_six_fifths: SpiralMeasure  # pi / phi^2 - 6/5
    gap_text: str
    phi_text: str
    sqrt_5pi_over_6: str
    agreeing_decimals: int


def pi_phi_check(digits: int = 30) -> PiPhiReport:
    """pi/phi^2 against 6/5, and phi against sqrt(5 pi / 6)."""
    # phi^-2 = 2 - phi
    ratio = SpiralMeasure(v=(PHI * PHI).inv())
    gap = ratio - SpiralMeasure(u=GoldenNumber(6) / 5)
    phi_dec = gn_to_decimal(PHI, digits + 5)
    with mpmath.workdps(digits + 10):
        approx = mpmath.sqrt(5 * mpmath.pi / 6)
        approx_dec = Decimal(mpmath.nstr(approx, digits + 5, strip_zeros=False))
    a, b = str(phi_dec), str(approx_dec)
    point = a.index(".")
    agree = 0
    while a[point + agree + 1] == b[point + agree + 1]:
        agree += 1
    return PiPhiReport(
        ratio=ratio,
        ratio_text=ratio.evaluate(digits),
        gap_to_six_fifths=gap,
        gap_text=gap.evaluate(digits),
        phi_text=format_significant(phi_dec, digits),
        sqrt_5pi_over_6=format_significant(approx_dec, digits),
        agreeing_decimals=agree,
    )
