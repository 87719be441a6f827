"""Partial sums of the golden spiral measures against their exact limits."""
import argparse
from dataclasses import dataclass

from goldenrect import PHI, cumulative, golden_totals, layout


@dataclass(frozen=True)
class ConvergenceConfig:
    steps: int = 50
    every: int = 5
    digits: int = 15


def table(cfg: ConvergenceConfig) -> list[tuple]:
    trace = layout(PHI, 1, cfg.steps)
    limit = golden_totals(1)
    rows = []
    for n in range(1, cfg.steps + 1):
        if n % cfg.every and n != 1:
            continue
        tot = cumulative(trace, n)
        rows.append((n, *((name, (tot_m - getattr(limit, name)).evaluate(6)) for name, tot_m in tot.items())))
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--steps", type=int, default=ConvergenceConfig.steps)
    ap.add_argument("--every", type=int, default=ConvergenceConfig.every)
    cfg = ConvergenceConfig(steps=ap.parse_args().steps, every=ap.parse_args().every)
    limit = golden_totals(1)
    for name, value in limit.items():
        print(f"{name}_inf = {value} = {value.evaluate(cfg.digits)}")
    print("n\t" + "\t".join(f"{name}_n - {name}_inf" for name, _ in limit.items()))
    for n, *cols in table(cfg):
        print(f"{n}\t" + "\t".join(v for _, v in cols))


if __name__ == "__main__":
    main()
