"""Print every checked formula with its verdict, and the list of errata."""
import argparse
from dataclasses import dataclass

from goldenrect.errata import collect


@dataclass(frozen=True)
class ErrataConfig:
    max_n: int = 25


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=ErrataConfig.max_n)
    cfg = ErrataConfig(max_n=ap.parse_args().max_n)
    doc = collect(cfg.max_n)
    print(f"Fibonacci identities, n = 1..{cfg.max_n}")
    for row in doc["identities"]:
        lo, hi = row["checked_n"]
        print(f"  {row['id']:>2}  {row['status']:<14} n={lo}..{hi}  {row['printed_form']}")
    print("other formulas")
    for c in doc["claims"]:
        print(f"  {c['status']:<14} {c['printed']}")
    print(f"errata ({len(doc['errata'])})")
    for e in doc["errata"]:
        printed = e.get("printed") or e.get("printed_form")
        corrected = e.get("corrected") or e.get("corrected_form")
        print(f"  printed:   {printed}\n  corrected: {corrected}")


if __name__ == "__main__":
    main()
