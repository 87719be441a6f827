"""Fibonacci and Lucas numbers, partial sums, and brute-force identity checks.

The eighteen classic identities are registered as *claims*: each one has a
printed form, a brute-force left-hand side and the printed right-hand side.
Claims that fail carry a corrected right-hand side that is checked the same
way, so the ledger records exactly which printed statements are wrong.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Optional

from .errors import DomainError


def _fib_pair(n: int) -> tuple[int, int]:
    # (F_n, F_{n+1}) by fast doubling:
    #   F_{2k}   = F_k (2 F_{k+1} - F_k)
    #   F_{2k+1} = F_k^2 + F_{k+1}^2
    # both are F_{n+m} = F_{n-1} F_m + F_n F_{m+1} with m = n = k.
    a, b = 0, 1
    for bit in bin(n)[2:]:
        c = a * (2 * b - a)
        d = a * a + b * b
        if bit == "1":
            a, b = d, c + d
        else:
            a, b = c, d
    return a, b


def fib(n: int) -> int:
    """Return F_n for any integer n, with F_{-k} = (-1)^(k+1) F_k."""
    if n < 0:
        f = _fib_pair(-n)[0]
        return f if (-n) % 2 else -f
    return _fib_pair(n)[0]


def lucas(n: int) -> int:
    if n < 0:
        raise DomainError(f"lucas index must be >= 0, got {n}")
    return fib(n + 1) + fib(n - 1)


def tau(n: int) -> int:
    """Sum of consecutive products F_k F_{k+1} for k = 1 .. n-1, summed directly."""
    if n < 2:
        raise DomainError(f"tau needs n >= 2, got {n}")
    return sum(fib(k) * fib(k + 1) for k in range(1, n))


def tau_closed(n: int) -> int:
    """Parity closed form of :func:`tau`: F_n^2 for even n, F_n^2 - 1 for odd n."""
    if n < 2:
        raise DomainError(f"tau needs n >= 2, got {n}")
    f = fib(n)
    return f * f if n % 2 == 0 else f * f - 1


def convergent(n: int) -> Fraction:
    if n < 1:
        raise DomainError(f"convergent needs n >= 1, got {n}")
    return Fraction(fib(n + 1), fib(n))


# ---------------------------------------------------------------------------
# identity ledger


class Status(str, Enum):
    PASS_AS_PRINTED = "PassAsPrinted"
    FAIL_AS_PRINTED = "FailAsPrinted"
    PASS_CORRECTED = "PassCorrected"


@dataclass(frozen=True)
class IdentityVerdict:
    identity_id: int
    n: int
    lhs: int
    rhs: int
    status: Status
    printed_form: str
    corrected_form: Optional[str] = None
    corrected_rhs: Optional[int] = None

    @property
    def printed_holds(self) -> bool:
        return self.status is Status.PASS_AS_PRINTED

    @property
    def printed_status(self) -> Status:
        return Status.PASS_AS_PRINTED if self.printed_holds else Status.FAIL_AS_PRINTED

    def as_dict(self) -> dict:
        return {
            "id": self.identity_id,
            "n": self.n,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "printed": self.printed_status.value,
            "status": self.status.value,
            "printed_form": self.printed_form,
            "corrected_form": self.corrected_form,
            "corrected_rhs": self.corrected_rhs,
        }


@dataclass(frozen=True)
class _Claim:
    identity_id: int
    printed_form: str
    lhs: Callable[[int], int]
    rhs: Callable[[int], int]
    corrected_form: Optional[str] = None
    corrected_rhs: Optional[Callable[[int], int]] = None
    max_n: Optional[int] = None
    # predicate claims report (#instances holding, #instances checked)
    predicate: bool = False


def _alt(k: int) -> int:
    return 1 if k % 2 == 0 else -1


@lru_cache(maxsize=None)
def _isprime(k: int) -> bool:
    from sympy import isprime

    return bool(isprime(k))


def _count(check: Callable[[int], bool], n: int) -> int:
    return sum(1 for k in range(1, n + 1) if check(k))


def _pascal_diagonal(k: int) -> int:
    return sum(math.comb(k - 1 - i, i) for i in range((k - 1) // 2 + 1))


def _predicate(identity_id: int, printed: str, check: Callable[[int], bool], max_n=None) -> _Claim:
    return _Claim(
        identity_id,
        printed,
        lhs=lambda n: _count(check, n),
        rhs=lambda n: n,
        max_n=max_n,
        predicate=True,
    )


F = fib

_CLAIMS: dict[int, _Claim] = {
    c.identity_id: c
    for c in [
        _predicate(1, "gcd(F_k, F_{k+1}) = 1", lambda k: math.gcd(F(k), F(k + 1)) == 1),
        _Claim(
            2,
            "C^2 = A D + B^2 for consecutive A, B, C, D = F_n .. F_{n+3}",
            lhs=lambda n: F(n + 2) ** 2,
            rhs=lambda n: F(n) * F(n + 3) + F(n + 1) ** 2,
        ),
        _predicate(
            3,
            "F_k prime implies k prime, except F_4 = 3",
            lambda k: k == 4 or not _isprime(F(k)) or _isprime(k),
            max_n=45,
        ),
        _predicate(
            4,
            "sum_i C(k-1-i, i) = F_k (Pascal diagonals)",
            lambda k: _pascal_diagonal(k) == F(k),
        ),
        _Claim(
            5,
            "F_1 + ... + F_n = F_{n+2} - 1",
            lhs=lambda n: sum(F(k) for k in range(1, n + 1)),
            rhs=lambda n: F(n + 2) - 1,
        ),
        _Claim(
            6,
            "F_1 + F_3 + ... + F_{2n-1} = F_{2n}",
            lhs=lambda n: sum(F(2 * k - 1) for k in range(1, n + 1)),
            rhs=lambda n: F(2 * n),
        ),
        _Claim(
            7,
            "F_2 + F_4 + ... + F_{2n} = F_{2n+1} - 1",
            lhs=lambda n: sum(F(2 * k) for k in range(1, n + 1)),
            rhs=lambda n: F(2 * n + 1) - 1,
        ),
        _Claim(
            8,
            "F_1 - F_2 + ... + (-1)^(n+1) F_n = (-1)^(n+1) F_{n-1} + 1",
            lhs=lambda n: sum(_alt(k + 1) * F(k) for k in range(1, n + 1)),
            rhs=lambda n: _alt(n + 1) * F(n - 1) + 1,
        ),
        _Claim(
            9,
            "F_1 - F_2 + ... + F_{2n-1} - F_{2n} = -F_{2n-1} + 1",
            lhs=lambda n: sum(_alt(k + 1) * F(k) for k in range(1, 2 * n + 1)),
            rhs=lambda n: -F(2 * n - 1) + 1,
        ),
        _Claim(
            10,
            "F_1 - F_2 + ... - F_{2n} + F_{2n+1} = F_{2n} + 1",
            lhs=lambda n: sum(_alt(k + 1) * F(k) for k in range(1, 2 * n + 2)),
            rhs=lambda n: F(2 * n) + 1,
        ),
        _Claim(
            11,
            "F_1^2 + ... + F_n^2 = F_n F_{n+1}",
            lhs=lambda n: sum(F(k) ** 2 for k in range(1, n + 1)),
            rhs=lambda n: F(n) * F(n + 1),
        ),
        _Claim(
            12,
            "F_1 F_2 + F_2 F_3 + ... + F_{2n-1} F_{2n} = F_{2n}^2",
            lhs=lambda n: sum(F(k) * F(k + 1) for k in range(1, 2 * n)),
            rhs=lambda n: F(2 * n) ** 2,
        ),
        _Claim(
            13,
            "F_1 F_2 + ... + F_{2n} F_{2n+1} = F_{2n+1}^2 - 1",
            lhs=lambda n: sum(F(k) * F(k + 1) for k in range(1, 2 * n + 1)),
            rhs=lambda n: F(2 * n + 1) ** 2 - 1,
        ),
        _Claim(
            14,
            "F_1 + 2 F_2 + ... + n F_n = n F_{n+2} - F_{n+2} + 2",
            lhs=lambda n: sum(k * F(k) for k in range(1, n + 1)),
            rhs=lambda n: n * F(n + 2) - F(n + 2) + 2,
            corrected_form="F_1 + 2 F_2 + ... + n F_n = n F_{n+2} - F_{n+3} + 2",
            corrected_rhs=lambda n: n * F(n + 2) - F(n + 3) + 2,
        ),
        _Claim(
            15,
            "F_n^2 + F_{n+1}^2 = F_{2n+1}",
            lhs=lambda n: F(n) ** 2 + F(n + 1) ** 2,
            rhs=lambda n: F(2 * n + 1),
        ),
        _Claim(
            16,
            "F_{n-1} F_{n+1} = F_n^2 + (-1)^n",
            lhs=lambda n: F(n - 1) * F(n + 1),
            rhs=lambda n: F(n) ** 2 + _alt(n),
        ),
        _Claim(
            17,
            "F_{n+m} = F_{n-1} F_m + F_n F_{m+1}, for all m = 1 .. n",
            lhs=lambda n: sum(
                1 for m in range(1, n + 1) if F(n + m) == F(n - 1) * F(m) + F(n) * F(m + 1)
            ),
            rhs=lambda n: n,
            predicate=True,
        ),
        _Claim(
            18,
            "F_{n+1}^2 - F_{n-1}^2 = F_{2n}",
            lhs=lambda n: F(n + 1) ** 2 - F(n - 1) ** 2,
            rhs=lambda n: F(2 * n),
        ),
    ]
}

IDENTITY_IDS = tuple(sorted(_CLAIMS))
PREDICATE_IDS = tuple(i for i in IDENTITY_IDS if _CLAIMS[i].predicate)


def identity_domain(identity_id: int) -> tuple[int, Optional[int]]:
    claim = _claim(identity_id)
    return 1, claim.max_n


def _claim(identity_id: int) -> _Claim:
    try:
        return _CLAIMS[identity_id]
    except KeyError:
        raise DomainError(f"unknown identity {identity_id}; expected 1..18") from None


def identity_check(identity_id: int, n: int) -> IdentityVerdict:
    """Evaluate identity ``identity_id`` at instance size ``n`` by brute force.

    Predicate identities (1, 3, 4, 17) are checked over every instance up to
    ``n``; their lhs/rhs are the number of instances that hold and the number
    checked.
    """
    claim = _claim(identity_id)
    if n < 1 or (claim.max_n is not None and n > claim.max_n):
        hi = claim.max_n if claim.max_n is not None else "inf"
        raise DomainError(f"identity {identity_id} is checked for 1 <= n <= {hi}, got {n}")

    lhs, rhs = claim.lhs(n), claim.rhs(n)
    if lhs == rhs:
        return IdentityVerdict(identity_id, n, lhs, rhs, Status.PASS_AS_PRINTED, claim.printed_form)
    corrected = claim.corrected_rhs(n) if claim.corrected_rhs else None
    status = Status.PASS_CORRECTED if corrected == lhs else Status.FAIL_AS_PRINTED
    return IdentityVerdict(
        identity_id,
        n,
        lhs,
        rhs,
        status,
        claim.printed_form,
        corrected_form=claim.corrected_form,
        corrected_rhs=corrected,
    )


def identity_ledger(max_n: int) -> list[IdentityVerdict]:
    """Verdicts for every identity at every n in 1..max_n (capped per identity)."""
    out = []
    for i in IDENTITY_IDS:
        _, cap = identity_domain(i)
        top = max_n if cap is None else min(max_n, cap)
        out.extend(identity_check(i, n) for n in range(1, top + 1))
    return out
