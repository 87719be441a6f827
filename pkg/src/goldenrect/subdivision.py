"""Square-removal sequence, aureness degree and exact layout of the subdivision.

A rectangle ``m*b`` wide and ``b`` tall (``1 < m <= 2``) loses one square per
step, and each cut is meant to flip the residual rectangle between horizontal
and vertical.  The residual short sides obey

    x_{-1} = m*b,  x_0 = b,  x_k = x_{k-2} - x_{k-1}
           = (-1)^(k-1) (F_k m - F_{k+1}) b

Only m = phi keeps every term positive.  For any other ratio the sequence
reaches a term ``x_d <= 0``; ``d`` (the count of positive terms) is the
aureness degree.

Squares are laid out in the fixed cycle left, top, right, bottom.  The cycle
is a drawing convention only; no measure depends on it.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import DegreeExceeded, DomainError, RatioOutOfRange
from .exactnum import PHI, GoldenNumber, Scalar, as_golden
from .fibonacci import fib

Point = tuple[GoldenNumber, GoldenNumber]

LEFT, TOP, RIGHT, BOTTOM = range(4)
DIRECTIONS = ("left", "top", "right", "bottom")


@dataclass(frozen=True)
class RatioClass:
    golden: bool
    degree: Optional[int] = None

    @property
    def kind(self) -> str:
        return "GoldenInfinite" if self.golden else "FiniteDegree"

    def __str__(self):
        return self.kind if self.golden else f"FiniteDegree({self.degree})"


GOLDEN_INFINITE = RatioClass(golden=True)


def finite_degree(d: int) -> RatioClass:
    return RatioClass(golden=False, degree=d)


@dataclass(frozen=True)
class Rect:
    x: GoldenNumber
    y: GoldenNumber
    width: GoldenNumber
    height: GoldenNumber

    @property
    def area(self) -> GoldenNumber:
        return self.width * self.height


@dataclass(frozen=True)
class Arc:
    """Quarter circle swept clockwise from ``start_quadrant`` (in quarter turns)."""

    center: Point
    radius: GoldenNumber
    start_quadrant: int

    def _at(self, quadrant: int) -> Point:
        cx, cy = self.center
        r = self.radius
        dx, dy = ((r, 0), (0, r), (-r, 0), (0, -r))[quadrant % 4]
        return cx + dx, cy + dy

    @property
    def start(self) -> Point:
        return self._at(self.start_quadrant)

    @property
    def end(self) -> Point:
        return self._at(self.start_quadrant - 1)


@dataclass(frozen=True)
class SquareStep:
    k: int
    side: GoldenNumber
    origin: Point
    arc: Arc

    @property
    def direction(self) -> str:
        return DIRECTIONS[(self.k - 1) % 4]


@dataclass(frozen=True)
class SubdivisionTrace:
    m: GoldenNumber
    b: GoldenNumber
    xs: tuple[GoldenNumber, ...]
    steps: tuple[SquareStep, ...]
    residual: Rect
    terminated: bool

    @property
    def exact_tiling(self) -> bool:
        """The last cut left nothing over (``x_n == 0``)."""
        return not self.residual.area

    @property
    def residual_area(self) -> GoldenNumber:
        # x_{n-1} * x_n; equals the residual rectangle's area
        return self.xs[-2] * self.xs[-1]

    @property
    def width(self) -> GoldenNumber:
        return self.m * self.b


def check_ratio(m: Scalar) -> GoldenNumber:
    m = as_golden(m)
    if not (m > 1 and m <= 2):
        raise RatioOutOfRange(f"ratio {m} is outside (1, 2]")
    return m


def _check_side(b: Scalar) -> GoldenNumber:
    b = as_golden(b)
    if b.sign() <= 0:
        raise DomainError(f"side must be positive, got {b}")
    return b


def x_closed_form(m: Scalar, k: int, b: Scalar = 1) -> GoldenNumber:
    """(-1)^(k-1) (F_k m - F_{k+1}) b, valid for every k >= -1."""
    sign = 1 if (k - 1) % 2 == 0 else -1
    return sign * (fib(k) * as_golden(m) - fib(k + 1)) * as_golden(b)


def x_sequence(m: Scalar, b: Scalar, max_steps: int) -> list[GoldenNumber]:
    """x_0 .. x_n with n = min(max_steps, first index whose term is <= 0)."""
    m, b = check_ratio(m), _check_side(b)
    if max_steps < 1:
        raise DomainError(f"max_steps must be >= 1, got {max_steps}")
    prev, cur = m * b, b
    xs = [cur]
    for _ in range(max_steps):
        prev, cur = cur, prev - cur
        xs.append(cur)
        if cur.sign() <= 0:
            break
    return xs


def aureness_degree(m: Scalar) -> RatioClass:
    m = check_ratio(m)
    if m == PHI:
        return GOLDEN_INFINITE
    # terminates for every m != phi: F_k |m - phi| outgrows |F_k phi - F_{k+1}|
    prev, cur, d = m, GoldenNumber(1), 0
    while cur.sign() > 0:
        d += 1
        prev, cur = cur, prev - cur
    return finite_degree(d)


def square_capacity(m: Scalar) -> Optional[int]:
    """Number of squares the alternating scheme can actually place (None for phi).

    Square k has side x_{k-1} and fits iff x_k >= 0, so a degree-d ratio
    holds d squares when x_d == 0 and d - 1 otherwise.
    """
    cls = aureness_degree(m)
    if cls.golden:
        return None
    d = cls.degree
    return d if x_closed_form(m, d) == 0 else d - 1


def _arc_for(direction: int, ox: GoldenNumber, oy: GoldenNumber, s: GoldenNumber) -> Arc:
    # start corner, centre corner: each arc ends where the next square's arc begins
    if direction == LEFT:
        return Arc((ox + s, oy), s, 2)
    if direction == TOP:
        return Arc((ox, oy), s, 1)
    if direction == RIGHT:
        return Arc((ox, oy + s), s, 0)
    return Arc((ox + s, oy + s), s, 3)


def layout(m: Scalar, b: Scalar, steps: int) -> SubdivisionTrace:
    """Place ``steps`` squares with exact coordinates (lower-left origin, y up)."""
    m, b = check_ratio(m), _check_side(b)
    if steps < 1:
        raise DomainError(f"steps must be >= 1, got {steps}")
    capacity = square_capacity(m)
    if capacity is not None and steps > capacity:
        raise DegreeExceeded(
            f"ratio {m} has aureness degree {aureness_degree(m).degree}; "
            f"at most {capacity} squares fit, asked for {steps}"
        )
    xs = x_sequence(m, b, steps)
    x0, y0, w, h = GoldenNumber(0), GoldenNumber(0), m * b, b
    placed = []
    for k in range(1, steps + 1):
        s = xs[k - 1]
        d = (k - 1) % 4
        if d == LEFT:
            ox, oy = x0, y0
            x0, w = x0 + s, w - s
        elif d == TOP:
            ox, oy = x0, y0 + h - s
            h = h - s
        elif d == RIGHT:
            ox, oy = x0 + w - s, y0
            w = w - s
        else:
            ox, oy = x0, y0
            y0, h = y0 + s, h - s
        placed.append(SquareStep(k, s, (ox, oy), _arc_for(d, ox, oy, s)))
    return SubdivisionTrace(
        m=m,
        b=b,
        xs=tuple(xs),
        steps=tuple(placed),
        residual=Rect(x0, y0, w, h),
        terminated=capacity is not None and steps == capacity,
    )

