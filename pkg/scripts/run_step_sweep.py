#!/usr/bin/env python3
"""Sweep the portfolio colouring over a grid of edge-probability exponents.

For G(n, p) with p = n^(x-1), runs the constructor portfolio across an x grid,
writes the raw per-trial rows to CSV, and prints a per-cell summary table with
the mean palette size and its empirical exponent ln(palette)/ln(n) next to the
predicted step-function exponent, so the step shape (rise, drop at x = 1/2,
rise to a peak near x = 3/5, then decay) can be eyeballed from a terminal.

Usage:
    python3 scripts/run_step_sweep.py --n 1024 --trials 3 --out step.csv
"""

import argparse
import math
import sys
from collections import defaultdict

from cliquecolour.lab import SweepConfig, run_sweep
from cliquecolour.theory import f_exponent


def summarise(rows):
    """Group sweep rows by x and return (x, mean_palette, count) sorted by x."""
    cells = defaultdict(list)
    for row in rows:
        if row.status == "ok" and row.colors is not None:
            cells[row.x].append(row.colors)
    return [(x, sum(v) / len(v), len(v)) for x, v in sorted(cells.items())]


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=1024, help="number of vertices")
    parser.add_argument("--trials", type=int, default=3, help="trials per grid cell")
    parser.add_argument("--seed", type=int, default=0, help="master seed")
    parser.add_argument("--out", default="step.csv", help="CSV output path")
    parser.add_argument(
        "--x-grid", default="0.25:0.95:0.05",
        help="exponent grid as start:stop:step (stop inclusive)",
    )
    parser.add_argument("--threads", type=int, default=None, help="worker threads")
    args = parser.parse_args(argv)

    start, stop, step = (float(part) for part in args.x_grid.split(":"))
    count = int(round((stop - start) / step)) + 1
    x_values = tuple(round(start + i * step, 10) for i in range(count))

    config = SweepConfig(
        n_values=(args.n,),
        x_values=x_values,
        trials=args.trials,
        seed=args.seed,
        methods=("portfolio",),
        out_path=args.out,
        threads=args.threads,
    )
    rows = run_sweep(config)
    print(f"wrote {args.out} ({len(rows)} rows)")

    log_n = math.log(args.n)
    print(f"{'x':>6} {'palette':>9} {'trials':>7} {'empirical':>10} {'predicted':>10}")
    for x, mean_palette, trials in summarise(rows):
        empirical = math.log(mean_palette) / log_n if mean_palette >= 1 else float("nan")
        print(f"{x:>6.2f} {mean_palette:>9.2f} {trials:>7} "
              f"{empirical:>10.3f} {f_exponent(x):>10.3f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
