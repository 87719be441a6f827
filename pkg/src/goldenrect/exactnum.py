"""Exact arithmetic over Q, over Q(sqrt 5) in the phi-basis, and over the
measure space spanned by {1, pi, sqrt 2} with Q(sqrt 5) coefficients.

Rationals are :class:`fractions.Fraction`.  A :class:`GoldenNumber` is
``r + s*phi`` with rational ``r, s``; a :class:`SpiralMeasure` is
``u + v*pi + w*sqrt2`` with golden coefficients.  Nothing here ever touches
a float until a value is explicitly evaluated.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from enum import IntEnum
from fractions import Fraction
from functools import lru_cache
from typing import Union

import mpmath

from .errors import RatioSyntaxError
from .fibonacci import fib

BigRational = Fraction
Scalar = Union[int, Fraction, "GoldenNumber"]

GUARD_DIGITS = 10


class Sign(IntEnum):
    NEGATIVE = -1
    ZERO = 0
    POSITIVE = 1


def _rational(x) -> Fraction:
    if isinstance(x, bool) or not isinstance(x, (int, Fraction)):
        raise TypeError(f"expected an int or Fraction, got {type(x).__name__}")
    return Fraction(x)


def _sgn(q: Fraction) -> int:
    return (q > 0) - (q < 0)


@dataclass(frozen=True, eq=False)
class GoldenNumber:
    """The element ``r + s*phi`` of Q(sqrt 5), phi = (1 + sqrt 5)/2."""

    r: Fraction = Fraction(0)
    s: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "r", _rational(self.r))
        object.__setattr__(self, "s", _rational(self.s))

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return GoldenNumber(self.r + o.r, self.s + o.s)

    __radd__ = __add__

    def __neg__(self):
        return GoldenNumber(-self.r, -self.s)

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __sub__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return GoldenNumber(self.r - o.r, self.s - o.s)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        # phi^2 = 1 + phi
        ss = self.s * o.s
        return GoldenNumber(self.r * o.r + ss, self.r * o.s + o.r * self.s + ss)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inv()

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inv()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inv() ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj(self) -> "GoldenNumber":
        # phi -> phi_bar = 1 - phi
        return GoldenNumber(self.r + self.s, -self.s)

    def norm(self) -> Fraction:
        return self.r * self.r + self.r * self.s - self.s * self.s

    def inv(self) -> "GoldenNumber":
        nrm = self.norm()
        if nrm == 0:
            raise ZeroDivisionError("GoldenNumber inverse of zero")
        c = self.conj()
        return GoldenNumber(c.r / nrm, c.s / nrm)

    # -- comparison ---------------------------------------------------------

    def sign(self) -> Sign:
        # r + s*phi = ((2r + s) + s*sqrt5) / 2
        return Sign(_sign_a_plus_c_sqrt5(2 * self.r + self.s, self.s))

    def __eq__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return self.r == o.r and self.s == o.s

    def __hash__(self):
        return hash(self.r) if self.s == 0 else hash((self.r, self.s))

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __bool__(self):
        return bool(self.r) or bool(self.s)

    # -- views --------------------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.s == 0

    def sqrt5_basis(self) -> tuple[Fraction, Fraction]:
        """Return ``(a, c)`` with value ``a + c*sqrt5``."""
        return self.r + self.s / 2, self.s / 2

    def __float__(self):
        return float(gn_to_float(self, 17))

    def __str__(self):
        return format_golden(self)

    def __repr__(self):
        return f"GoldenNumber({format_golden(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "GoldenNumber":
        return parse_golden(text)


def _coerce(x):
    if isinstance(x, GoldenNumber):
        return x
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return GoldenNumber(Fraction(x), Fraction(0))
    return NotImplemented


def as_golden(x: Scalar) -> GoldenNumber:
    g = _coerce(x)
    if g is NotImplemented:
        raise TypeError(f"cannot interpret {x!r} as a GoldenNumber")
    return g


def _sign_a_plus_c_sqrt5(a: Fraction, c: Fraction) -> int:
    sa, sc = _sgn(a), _sgn(c)
    if sc == 0 or sa == sc:
        return sa
    if sa == 0:
        return sc
    # opposite signs: the larger of a^2 and 5c^2 wins; equality needs a = c = 0
    return sa if a * a > 5 * c * c else sc


ZERO = GoldenNumber(0, 0)
ONE = GoldenNumber(1, 0)
PHI = GoldenNumber(0, 1)
PHI_BAR = GoldenNumber(1, -1)


# ---------------------------------------------------------------------------
# functional surface


def gn_add(x: GoldenNumber, y: GoldenNumber) -> GoldenNumber:
    return as_golden(x) + as_golden(y)


def gn_sub(x: GoldenNumber, y: GoldenNumber) -> GoldenNumber:
    return as_golden(x) - as_golden(y)


def gn_neg(x: GoldenNumber) -> GoldenNumber:
    return -as_golden(x)


def gn_mul(x: GoldenNumber, y: GoldenNumber) -> GoldenNumber:
    return as_golden(x) * as_golden(y)


def gn_inv(x: GoldenNumber) -> GoldenNumber:
    return as_golden(x).inv()


def gn_conj(x: GoldenNumber) -> GoldenNumber:
    return as_golden(x).conj()


def gn_sign(x: GoldenNumber) -> Sign:
    return as_golden(x).sign()


def gn_phi_pow(n: int) -> GoldenNumber:
    """phi^n = F_{n-1} + F_n * phi, for every integer n."""
    return GoldenNumber(fib(n - 1), fib(n))


# ---------------------------------------------------------------------------
# text form

_RAT = r"\d+(?:/\d+)?"
_GOLDEN_RE = re.compile(
    rf"(?P<r>[+-]?{_RAT})?(?:(?P<sign>[+-])?(?P<s>{_RAT})?\*?(?P<phi>phi))?"
)


def _parse_rat(tok: str, text: str, pos: int) -> Fraction:
    num, _, den = tok.partition("/")
    if den and int(den) == 0:
        raise RatioSyntaxError(text, pos, "zero denominator")
    return Fraction(int(num), int(den) if den else 1)


def parse_golden(text: str) -> GoldenNumber:
    """Parse ``"phi"``, ``"3/2"``, ``"-4"``, ``"1/2 + 3/4phi"`` or ``"1 - 2*phi"``."""
    where = [i for i, ch in enumerate(text) if not ch.isspace()]
    compact = "".join(text[i] for i in where)

    def pos(i: int) -> int:
        # compact index -> index in the caller's text
        return where[i] if i < len(where) else len(text)

    if not compact:
        raise RatioSyntaxError(text, 0, "empty input")
    m = _GOLDEN_RE.fullmatch(compact)
    if m is None:
        raise RatioSyntaxError(text, pos(_GOLDEN_RE.match(compact).end()))
    r_tok, sign, s_tok, phi = m.group("r", "sign", "s", "phi")
    r_at, s_at = m.start("r"), m.start("s")
    if phi and sign is None and r_tok is not None:
        if s_tok is not None:
            raise RatioSyntaxError(text, pos(s_at), "expected '+' or '-' before phi term")
        # "3/4phi": the leading rational is the phi coefficient
        r_tok, s_tok, s_at = None, r_tok, r_at
    r = _parse_rat(r_tok, text, pos(r_at)) if r_tok else Fraction(0)
    s = Fraction(0)
    if phi:
        s = Fraction(1)
        if s_tok is not None:
            neg = s_tok[0] == "-"
            s = _parse_rat(s_tok.lstrip("+-"), text, pos(s_at))
            s = -s if neg else s
        if sign == "-":
            s = -s
    return GoldenNumber(r, s)


def _fmt_rat(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_golden(x: GoldenNumber) -> str:
    """Lossless text form, e.g. ``"1/2 + 3/4*phi"``; round-trips via :func:`parse_golden`."""
    r, s = x.r, x.s
    if s == 0:
        return _fmt_rat(r)
    mag = abs(s)
    phi_term = "phi" if mag == 1 else f"{_fmt_rat(mag)}*phi"
    if r == 0:
        return phi_term if s > 0 else f"-{phi_term}"
    return f"{_fmt_rat(r)} {'+' if s > 0 else '-'} {phi_term}"


# ---------------------------------------------------------------------------
# decimal evaluation
#
# Every value here is a rational combination of 1, sqrt5, pi, pi*sqrt5,
# sqrt2, sqrt10.  Those six constants are linearly independent over Q, so a
# value is zero iff all six coefficients are, and otherwise the working
# precision can be raised until cancellation no longer eats the digits.

_CONSTANTS = ("1", "sqrt5", "pi", "pi*sqrt5", "sqrt2", "sqrt10")


@lru_cache(maxsize=32)
def _constants(prec: int) -> dict[str, Decimal]:
    with localcontext() as ctx:
        ctx.prec = prec
        with mpmath.workdps(prec + 5):
            pi = Decimal(mpmath.nstr(mpmath.pi, prec + 5, strip_zeros=False))
        sqrt5 = Decimal(5).sqrt()
        return {
            "1": Decimal(1),
            "sqrt5": sqrt5,
            "pi": +pi,
            "pi*sqrt5": pi * sqrt5,
            "sqrt2": Decimal(2).sqrt(),
            "sqrt10": Decimal(10).sqrt(),
        }


def _q(x: Fraction) -> Decimal:
    return Decimal(x.numerator) / Decimal(x.denominator)


def _evaluate(coeffs: dict[str, Fraction], digits: int) -> Decimal:
    """Evaluate ``sum(coeff * constant)`` with ``digits`` significant digits trustworthy."""
    terms = {k: v for k, v in coeffs.items() if v}
    if not terms:
        return Decimal(0)
    prec = digits + GUARD_DIGITS
    while True:
        with localcontext() as ctx:
            ctx.prec = prec
            consts = _constants(prec)
            parts = [_q(c) * consts[k] for k, c in terms.items()]
            total = sum(parts, Decimal(0))
            biggest = max(p.adjusted() for p in parts)
        lost = biggest - total.adjusted() if total else prec
        if lost + digits + GUARD_DIGITS <= prec:
            return total
        prec = lost + digits + 2 * GUARD_DIGITS


def format_significant(value: Decimal, digits: int) -> str:
    """Fixed-point text with ``digits`` significant digits, round-half-even."""
    if digits < 1:
        raise ValueError("digits must be >= 1")
    if value == 0:
        return "0"
    with localcontext() as ctx:
        ctx.prec = max(digits, abs(value.adjusted())) + 50
        q = value.quantize(Decimal(1).scaleb(value.adjusted() - digits + 1), rounding=ROUND_HALF_EVEN)
        if q.adjusted() != value.adjusted():
            # rounding carried into a new leading digit
            q = q.quantize(Decimal(1).scaleb(q.adjusted() - digits + 1), rounding=ROUND_HALF_EVEN)
    return format(q, "f")


def _golden_coeffs(x: GoldenNumber, one: str, root5: str) -> dict[str, Fraction]:
    a, c = x.sqrt5_basis()
    return {one: a, root5: c}


def gn_to_decimal(x: GoldenNumber, digits: int) -> Decimal:
    return _evaluate(_golden_coeffs(as_golden(x), "1", "sqrt5"), digits)


def gn_to_float(x: GoldenNumber, digits: int) -> str:
    """Decimal string of ``x`` to ``digits`` significant digits."""
    return format_significant(gn_to_decimal(x, digits), digits)


# ---------------------------------------------------------------------------
# measures


@dataclass(frozen=True, eq=False)
class SpiralMeasure:
    """``u + v*pi + w*sqrt2`` with golden coefficients.

    This is a vector space over Q(sqrt 5), not a ring: multiplying two
    measures would need pi^2 or pi*sqrt2, so it raises ``TypeError``.
    """

    u: GoldenNumber = ZERO
    v: GoldenNumber = ZERO
    w: GoldenNumber = ZERO

    def __post_init__(self):
        for name in ("u", "v", "w"):
            object.__setattr__(self, name, as_golden(getattr(self, name)))

    def __add__(self, other):
        if not isinstance(other, SpiralMeasure):
            return NotImplemented
        return SpiralMeasure(self.u + other.u, self.v + other.v, self.w + other.w)

    def __sub__(self, other):
        if not isinstance(other, SpiralMeasure):
            return NotImplemented
        return SpiralMeasure(self.u - other.u, self.v - other.v, self.w - other.w)

    def __neg__(self):
        return SpiralMeasure(-self.u, -self.v, -self.w)

    def __mul__(self, other):
        if isinstance(other, SpiralMeasure):
            raise TypeError("product of two spiral measures leaves the {1, pi, sqrt2} basis")
        k = _coerce(other)
        if k is NotImplemented:
            return k
        return SpiralMeasure(self.u * k, self.v * k, self.w * k)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, SpiralMeasure):
            return NotImplemented
        return self.u == other.u and self.v == other.v and self.w == other.w

    def __hash__(self):
        return hash((self.u, self.v, self.w))

    def __bool__(self):
        return bool(self.u) or bool(self.v) or bool(self.w)

    def coefficients(self) -> dict[str, Fraction]:
        out = _golden_coeffs(self.u, "1", "sqrt5")
        out.update(_golden_coeffs(self.v, "pi", "pi*sqrt5"))
        out.update(_golden_coeffs(self.w, "sqrt2", "sqrt10"))
        return out

    def to_decimal(self, digits: int) -> Decimal:
        return _evaluate(self.coefficients(), digits)

    def evaluate(self, digits: int) -> str:
        return format_significant(self.to_decimal(digits), digits)

    def __float__(self):
        return float(self.to_decimal(17))

    def exact(self) -> tuple[str, str, str]:
        return str(self.u), str(self.v), str(self.w)

    def __str__(self):
        parts = []
        for coeff, unit in ((self.u, ""), (self.v, "pi"), (self.w, "sqrt2")):
            if not coeff:
                continue
            c = str(coeff)
            if unit:
                c = unit if c == "1" else f"({c})*{unit}"
            parts.append(c)
        return " + ".join(parts) if parts else "0"


def measure_eval(m: SpiralMeasure, digits: int) -> str:
    return m.evaluate(digits)


PI = SpiralMeasure(v=ONE)
SQRT2 = SpiralMeasure(w=ONE)
UNIT = SpiralMeasure(u=ONE)
