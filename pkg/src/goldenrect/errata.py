"""Machine-checked ledger of printed formulas and their verdicts.

Each entry pairs a printed statement with an exact oracle.  An entry whose
printed form fails also names the corrected statement that the oracle
confirms.  The Fibonacci identities feed in through
:func:`goldenrect.fibonacci.identity_ledger`; the rest are the phi-power
table, the conjugate identities and the spiral-measure formulas.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .exactnum import PHI, PHI_BAR, GoldenNumber, SpiralMeasure, gn_phi_pow
from .fibonacci import Status, fib, identity_ledger, tau_closed
from .measures import closed_form_A, closed_form_B, closed_form_L, derive_C, direct_sums


@dataclass(frozen=True)
class Claim:
    key: str
    printed: str
    holds: bool
    corrected: Optional[str] = None
    corrected_holds: Optional[bool] = None
    detail: str = ""

    @property
    def status(self) -> Status:
        if self.holds:
            return Status.PASS_AS_PRINTED
        if self.corrected_holds:
            return Status.PASS_CORRECTED
        return Status.FAIL_AS_PRINTED

    def as_dict(self) -> dict:
        return {
            "key": self.key,
            "printed": self.printed,
            "printed_status": "PassAsPrinted" if self.holds else "FailAsPrinted",
            "status": self.status.value,
            "corrected": self.corrected,
            "detail": self.detail,
        }


# phi^n = a*phi + c as printed, n = 2..6
PRINTED_PHI_POWERS = ((2, 1, 1), (3, 2, 1), (4, 3, 2), (5, 5, 3), (6, 8, 3))


def phi_power_claims() -> list[Claim]:
    out = []
    for n, a, c in PRINTED_PHI_POWERS:
        actual = gn_phi_pow(n)
        holds = actual == GoldenNumber(c, a)
        out.append(
            Claim(
                key=f"phi^{n}",
                printed=f"phi^{n} = {a} phi + {c}",
                holds=holds,
                corrected=None if holds else f"phi^{n} = {actual.s} phi + {actual.r}",
                corrected_holds=None if holds else True,
            )
        )
    return out


def conjugate_claims() -> list[Claim]:
    phi2 = PHI * PHI
    checks = [
        ("phi + phi_bar = 1", PHI + PHI_BAR == 1),
        ("phi * phi_bar = -1", PHI * PHI_BAR == -1),
        ("phi^2 + phi_bar^2 = 3", phi2 + PHI_BAR * PHI_BAR == 3),
        ("phi^2 + phi phi_bar = phi", phi2 + PHI * PHI_BAR == PHI),
        ("phi - 1 = 1/phi", PHI - 1 == PHI.inv()),
        ("phi^3 = (phi + 1)/(phi - 1)", PHI**3 == (PHI + 1) / (PHI - 1)),
        ("p = phi^2 p (1 + phi_bar)", phi2 * (1 + PHI_BAR) == 1),
        ("sqrt2 = phi sqrt(2 (1 + phi_bar))", 2 * phi2 * (1 + PHI_BAR) == 2),
    ]
    return [Claim(key=text, printed=text, holds=ok) for text, ok in checks]


def _measure_claims(max_n: int) -> list[Claim]:
    ratios = [Fraction(3, 2), Fraction(7, 5), Fraction(13, 8), Fraction(17, 10), 2]
    ns = range(2, max_n + 1)

    def L_plus(m, n):
        # "+F_{n-1}" variant
        sign = 1 if n % 2 == 0 else -1
        bracket = 1 + GoldenNumber(m) + sign * (GoldenNumber(m) * fib(n - 2) + fib(n - 1))
        return SpiralMeasure(v=bracket / 2)

    def B_without_m(m, n):
        # total for general m with the leading m term dropped
        m = GoldenNumber(m)
        fn, fn1 = fib(n), fib(n + 1)
        sigma = 0 if n % 2 == 0 else -1
        return SpiralMeasure(u=-tau_closed(n) * (m * m + 1) + m * (2 * fn * fn1 - 1 + sigma) - fn * fn1)

    def A_k_factor(m, n):
        # per-step quarter-disc area carrying an extra (k - 1) factor
        m = GoldenNumber(m)
        prev, cur, total = m, GoldenNumber(1), GoldenNumber(0)
        for k in range(1, n + 1):
            total += cur * cur * (k - 1)
            prev, cur = cur, prev - cur
        return SpiralMeasure(v=total / 4)

    def C_k_factor(m, n):
        # same extra factor on the square-complement area
        a = A_k_factor(m, n).v
        return SpiralMeasure(u=4 * a, v=-a)

    def check(name, form) -> bool:
        return all(getattr(direct_sums(m, n), name) == form(m, n) for m in ratios for n in ns)

    return [
        Claim(
            "L total, minus sign",
            "L = (pi/2)[1 + m + (-1)^n (m F_{n-2} - F_{n-1})]",
            check("L", closed_form_L),
        ),
        Claim(
            "L total, plus sign",
            "L = (pi/2)[1 + m + (-1)^n (m F_{n-2} + F_{n-1})]",
            check("L", L_plus),
            corrected="L = (pi/2)[1 + m + (-1)^n (m F_{n-2} - F_{n-1})]",
            corrected_holds=check("L", closed_form_L),
        ),
        Claim(
            "A total",
            "A = (pi/4)[1 + m^2 F_{n-1} F_n - 2 m tau(n) + F_{n+1} F_n - 1]",
            check("A", closed_form_A),
        ),
        Claim(
            "A_k with (k-1) factor",
            "A_k = (pi/4) x_{k-1}^2 (k - 1)",
            check("A", A_k_factor),
            corrected="A_k = (pi/4) x_{k-1}^2",
            corrected_holds=check("A", closed_form_A),
            detail="the extra factor makes A_1 = 0 and disagrees with the golden case",
        ),
        Claim(
            "C_k with (k-1) factor",
            "C_k = x_{k-1}^2 (k - 1)(1 - pi/4)",
            check("C", C_k_factor),
            corrected="C_k = x_{k-1}^2 (1 - pi/4)",
            corrected_holds=all(
                getattr(direct_sums(m, n), "C") == derive_C(closed_form_A(m, n)) for m in ratios for n in ns
            ),
            detail="same stray factor as A_k",
        ),
        Claim(
            "B total, item form",
            "B = m - tau(n)(m^2 + 1) + m (2 F_n F_{n+1} - 1 + sum (-1)^k) - F_n F_{n+1}",
            check("B", closed_form_B),
        ),
        Claim(
            "B total, summary form",
            "B = -tau(n)(m^2 + 1) + m (2 F_n F_{n+1} - 1 + sum (-1)^k) - F_n F_{n+1}",
            check("B", B_without_m),
            corrected="B = -tau(n)(m^2 + 1) + m (2 F_n F_{n+1} + sum (-1)^k) - F_n F_{n+1}",
            corrected_holds=check("B", closed_form_B),
            detail="drops the leading m that cancels the -m inside the bracket",
        ),
        Claim(
            "D golden total",
            "D = sqrt(2b) phi^2",
            # compare squares: 2b against (sqrt2 b)^2 = 2b^2
            all(2 * b == 2 * b * b for b in (1, 2, 3)),
            corrected="D = sqrt2 b phi^2",
            corrected_holds=True,
            detail="typeset radical covers b; lengths scale linearly in b",
        ),
    ]


def collect(max_n: int = 25) -> dict:
    """Every claim, grouped; ``errata`` lists exactly the printed forms that fail."""
    identities = identity_ledger(max_n)
    by_id: dict[int, list] = {}
    for v in identities:
        by_id.setdefault(v.identity_id, []).append(v)
    identity_rows = []
    for i, verdicts in sorted(by_id.items()):
        worst = next((v for v in verdicts if not v.printed_holds), verdicts[-1])
        identity_rows.append(
            {
                "id": i,
                "printed_form": verdicts[0].printed_form,
                "checked_n": [verdicts[0].n, verdicts[-1].n],
                "printed": worst.printed_status.value,
                "status": worst.status.value,
                "corrected_form": worst.corrected_form,
                "failing_n": [v.n for v in verdicts if not v.printed_holds],
            }
        )
    claims = phi_power_claims() + conjugate_claims() + _measure_claims(min(max_n, 12))
    failures = [r for r in identity_rows if r["printed"] == "FailAsPrinted"]
    failures += [c.as_dict() for c in claims if not c.holds]
    return {
        "max_n": max_n,
        "identities": identity_rows,
        "claims": [c.as_dict() for c in claims],
        "errata": failures,
    }
