#!/usr/bin/env python3
"""Render the clique-colouring step-function figure from a sweep CSV.

Reads rows produced by the cliquecolour sweep harness, computes the
empirical exponent ln(palette)/ln(n) for every successful row, averages
per (method, x) cell, and plots the cell means against the edge-probability
exponent x (where p = n^(x-1)). With --overlay the predicted piecewise
step exponent is drawn on top.

This script is deliberately decoupled from the cliquecolour library: it
talks to it only through the CSV schema. The step formula is re-implemented
here and, when the overlay is requested, cross-checked against the values
the harness printed into the CSV's regime column.

Usage:
    figures/plot_step.py --csv sweep.csv --out step.png [--n 4096] [--overlay]
"""

import argparse
import csv
import math
import sys
from collections import defaultdict
from dataclasses import dataclass
from typing import Optional

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

REQUIRED_COLUMNS = (
    "n", "x", "p", "seed", "trial", "method", "colors", "valid",
    "lower_bound", "elapsed_ms", "status", "regime",
)

OVERLAY_SAMPLES = 3


class SchemaError(ValueError):
    """The CSV does not follow the sweep schema this script expects."""


@dataclass(frozen=True)
class FigureSpec:
    csv_path: str
    output_path: str
    n_filter: Optional[int] = None
    overlay_theory: bool = False


def step_exponent(x: float) -> float:
    """Predicted exponent of the palette size in n, as a function of x.

    Piecewise: x on (0, 1/2); 1 + 1.5*(x - 1) on [1/2, 3/5); 1 - x on [3/5, 1).
    """
    if not 0.0 < x < 1.0:
        raise ValueError(f"x must lie in (0, 1), got {x!r}")
    if x < 0.5:
        return x
    if x < 0.6:
        return 1.0 + 1.5 * (x - 1.0)
    return 1.0 - x


def read_sweep_rows(path: str) -> list:
    """Parse the CSV and return its rows as dicts, validating the header."""
    with open(path, newline="", encoding="ascii") as handle:
        reader = csv.DictReader(handle)
        if reader.fieldnames is None:
            raise SchemaError(f"{path}: empty file, expected a sweep CSV header")
        missing = [col for col in REQUIRED_COLUMNS if col not in reader.fieldnames]
        if missing:
            raise SchemaError(f"{path}: missing sweep columns: {', '.join(missing)}")
        return list(reader)


def row_point(row: dict) -> Optional[tuple]:
    """Extract (n, x, method, exponent) from a row, or None if not plottable.

    Rows without an explicit x (probability-parameterised sweeps) get
    x = 1 + ln(p)/ln(n), the exponent that reproduces their p.
    """
    if row.get("status") != "ok" or not row.get("colors"):
        return None
    n = int(row["n"])
    colors = int(row["colors"])
    if n < 2 or colors < 1:
        return None
    if row.get("x"):
        x = float(row["x"])
    elif row.get("p") and float(row["p"]) > 0.0:
        x = 1.0 + math.log(float(row["p"])) / math.log(n)
    else:
        return None
    return n, x, row["method"], math.log(colors) / math.log(n)


def collect_series(rows, n_filter: Optional[int] = None) -> dict:
    """Group plottable rows into {method: [(x, mean exponent), ...]} sorted by x."""
    cells = defaultdict(list)
    for row in rows:
        point = row_point(row)
        if point is None:
            continue
        n, x, method, exponent = point
        if n_filter is not None and n != n_filter:
            continue
        cells[(method, x)].append(exponent)
    series = defaultdict(list)
    for (method, x), exponents in sorted(cells.items()):
        series[method].append((x, sum(exponents) / len(exponents)))
    return dict(series)


def regime_samples(rows, n_filter: Optional[int] = None) -> list:
    """Distinct (x, printed exponent) pairs from the CSV's regime column."""
    seen = {}
    for row in rows:
        point = row_point(row)
        regime = row.get("regime", "")
        if point is None or ":" not in regime:
            continue
        n, x, _, _ = point
        if n_filter is not None and n != n_filter:
            continue
        try:
            seen.setdefault(x, float(regime.rsplit(":", 1)[1]))
        except ValueError:
            continue
    return sorted(seen.items())


def verify_overlay(samples) -> None:
    """Cross-check the local step formula against exponents printed in the CSV."""
    for x, printed in samples[:OVERLAY_SAMPLES]:
        local = step_exponent(x)
        if not math.isclose(local, printed, rel_tol=1e-4, abs_tol=1e-6):
            raise SchemaError(
                f"regime column disagrees with the step formula at x={x}: "
                f"file says {printed}, formula gives {local:.6g}"
            )


def build_figure(spec: FigureSpec):
    """Return (figure, series) for the spec; raises on empty or bad input."""
    rows = read_sweep_rows(spec.csv_path)
    series = collect_series(rows, spec.n_filter)
    if not series:
        raise ValueError(f"{spec.csv_path}: no plottable rows (empty sweep?)")

    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    for method in sorted(series):
        xs = [x for x, _ in series[method]]
        es = [e for _, e in series[method]]
        ax.plot(xs, es, marker="o", linewidth=1.2, label=method)

    if spec.overlay_theory:
        verify_overlay(regime_samples(rows, spec.n_filter))
        grid = [i / 1000.0 for i in range(5, 996, 5)]
        ax.plot(grid, [step_exponent(x) for x in grid], "k--", linewidth=1.0,
                label="predicted step exponent")

    ax.set_xlim(0.0, 1.0)
    ax.set_xlabel("x  (edge probability p = n^(x-1))")
    ax.set_ylabel("empirical exponent  ln(palette) / ln(n)")
    title = "Clique-colouring palette growth"
    if spec.n_filter is not None:
        title += f"  (n = {spec.n_filter})"
    ax.set_title(title)
    ax.grid(True, alpha=0.3)
    ax.legend()
    fig.tight_layout()
    return fig, series


def plot_step_function(spec: FigureSpec) -> str:
    """Render the figure described by spec and return the output path."""
    fig, _ = build_figure(spec)
    try:
        fig.savefig(spec.output_path, dpi=150)
    finally:
        plt.close(fig)
    return spec.output_path


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--csv", required=True, help="sweep CSV to read")
    parser.add_argument("--out", required=True, help="image file to write")
    parser.add_argument("--n", type=int, default=None,
                        help="keep only rows with this number of vertices")
    parser.add_argument("--overlay", action="store_true",
                        help="draw the predicted step exponent")
    args = parser.parse_args(argv)
    spec = FigureSpec(
        csv_path=args.csv,
        output_path=args.out,
        n_filter=args.n,
        overlay_theory=args.overlay,
    )
    try:
        path = plot_step_function(spec)
    except SchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
