"""Survey aureness degree against two square-counting oracles over p/q in (1, 2].

The alternating-cut count (stop when a cut would not turn the residual a
quarter) matches the degree everywhere; the plain subtractive Euclidean
count matches only on Fibonacci ratios.
"""
import argparse
import math
from dataclasses import dataclass
from fractions import Fraction

from goldenrect import aureness_degree


@dataclass(frozen=True)
class SurveyConfig:
    max_pq: int = 60
    show: int = 12


def euclid_squares(p: int, q: int) -> int:
    count = 0
    while p and q:
        if p < q:
            p, q = q, p
        p -= q
        count += 1
    return count


def alternating_pieces(p: int, q: int) -> int:
    long, short, pieces = p, q, 0
    while True:
        pieces += 1
        long, short = short, long - short
        if short == 0:
            return pieces
        if short > long:
            return pieces + 1


def survey(cfg: SurveyConfig) -> dict:
    rows = []
    for p in range(1, cfg.max_pq + 1):
        for q in range(1, cfg.max_pq + 1):
            if 1 < Fraction(p, q) <= 2 and math.gcd(p, q) == 1:
                d = aureness_degree(Fraction(p, q)).degree
                rows.append((p, q, d, euclid_squares(p, q), alternating_pieces(p, q)))
    return {
        "ratios": len(rows),
        "euclid_agree": [r for r in rows if r[2] == r[3]],
        "euclid_disagree": [r for r in rows if r[2] != r[3]],
        "alternating_agree": sum(r[2] == r[4] for r in rows),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-pq", type=int, default=SurveyConfig.max_pq)
    ap.add_argument("--show", type=int, default=SurveyConfig.show)
    cfg = SurveyConfig(**{k.replace("-", "_"): v for k, v in vars(ap.parse_args()).items()})
    res = survey(cfg)
    print(f"reduced ratios p/q in (1, 2], p, q <= {cfg.max_pq}: {res['ratios']}")
    print(f"degree == alternating-cut count: {res['alternating_agree']}")
    print(f"degree == plain Euclid count:    {len(res['euclid_agree'])}")
    print("  agreeing:", ", ".join(f"{p}/{q}" for p, q, *_ in res["euclid_agree"]))
    print(f"first {cfg.show} disagreements (p/q, degree, euclid):")
    for p, q, d, e, _ in res["euclid_disagree"][: cfg.show]:
        print(f"  {p}/{q}\t{d}\t{e}")


if __name__ == "__main__":
    main()
