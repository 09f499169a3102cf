"""Reproducible experiment sweeps over G(n, p) and per-graph reports.

A sweep is a grid (n values) x (x values or p values) x (trials).  Each
cell/trial pair gets one graph, sampled from a seed derived by hashing the
master seed with the cell coordinates, and every requested method runs on
that same graph.  Results go to a CSV with a fixed header; with timing
disabled (the default) a rerun of the same config produces a byte-identical
file, which is what the regression tests pin.

Config files are flat ``key = value`` lines; see ``parse_config``.
"""

from __future__ import annotations

import csv
import os
import tempfile
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from . import constructors, solver
from .cliques import edge_triangle_stats
from .errors import BudgetExceededError, CliqueOverflowError, ParameterError
from .graph import Graph, GnpParams, keyed_hash, sample_gnp
from .theory import classify_regime

KNOWN_METHODS = ("dense", "domset", "exact", "mcf", "portfolio", "trifree")
CSV_HEADER = (
    "n", "x", "p", "seed", "trial", "method",
    "colors", "valid", "lower_bound", "elapsed_ms", "status", "regime",
)
THREADS_ENV = "CLIQUECOLOUR_THREADS"
DEFAULT_EXACT_GUARD = solver.EXACT_GUARD


@dataclass(frozen=True)
class SweepConfig:
    """Grid description for ``run_sweep``; exactly one of x_values/p_values."""

    n_values: tuple[int, ...]
    x_values: tuple[float, ...] | None = None
    p_values: tuple[float, ...] | None = None
    trials: int = 1
    seed: int = 0
    methods: tuple[str, ...] = ("portfolio",)
    budgets: dict[str, int] = field(default_factory=dict)
    out_path: str = "sweep.csv"
    exact_guard: int = DEFAULT_EXACT_GUARD
    timing: bool = False
    threads: int | None = None  # None: CLIQUECOLOUR_THREADS env or 1

    def __post_init__(self) -> None:
        if not self.n_values:
            raise ParameterError("n must list at least one value")
        if any(n < 1 for n in self.n_values):
            raise ParameterError("all n values must be positive")
        if (self.x_values is None) == (self.p_values is None):
            raise ParameterError("give exactly one of x and p")
        if self.x_values is not None:
            if not self.x_values:
                raise ParameterError("x must list at least one value")
            if any(not 0.0 < x < 1.0 for x in self.x_values):
                raise ParameterError("all x values must be in (0, 1)")
            if min(self.n_values) < 2:
                raise ParameterError("x-parameterized cells need n >= 2")
        else:
            if not self.p_values:
                raise ParameterError("p must list at least one value")
            if any(not 0.0 <= p <= 1.0 for p in self.p_values):
                raise ParameterError("all p values must be in [0, 1]")
        if self.trials < 1:
            raise ParameterError("trials must be at least 1")
        if not self.methods:
            raise ParameterError("methods must list at least one method")
        for m in self.methods:
            if m not in KNOWN_METHODS:
                raise ParameterError(f"unknown method {m!r}; known: {', '.join(KNOWN_METHODS)}")
        for m in self.budgets:
            if m not in KNOWN_METHODS:
                raise ParameterError(f"budget for unknown method {m!r}")
        if any(b <= 0 for b in self.budgets.values()):
            raise ParameterError("budgets must be positive milliseconds")
        if self.exact_guard < 1:
            raise ParameterError("exact_guard must be positive")
        if self.threads is not None and self.threads < 1:
            raise ParameterError("threads must be at least 1")
        needs_guard = [m for m in self.methods if m in ("exact", "mcf")]
        if needs_guard and max(self.n_values) > self.exact_guard:
            raise ParameterError(
                f"methods {needs_guard} need max n <= exact_guard = {self.exact_guard}, "
                f"got n = {max(self.n_values)}"
            )


_BOOL_WORDS = {"true": True, "false": False}


def _parse_bool(raw: str, key: str) -> bool:
    try:
        return _BOOL_WORDS[raw.strip().lower()]
    except KeyError:
        raise ParameterError(f"{key} must be true or false, got {raw!r}") from None


def parse_config(text: str) -> SweepConfig:
    """Parse a flat ``key = value`` sweep config.

    Keys: n, x, p (comma-separated lists), trials, seed, out, exact_guard,
    threads (integers), methods (comma-separated names), timing (true/false)
    and budget_<method>_ms (integer milliseconds).  ``#`` starts a comment.
    """
    fields: dict[str, object] = {}
    budgets: dict[str, int] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ParameterError(f"config line {line_no}: expected key = value, got {raw!r}")
        key, _, value = line.partition("=")
        key, value = key.strip(), value.strip()
        try:
            if key == "n":
                fields["n_values"] = tuple(int(v) for v in value.split(","))
            elif key == "x":
                fields["x_values"] = tuple(float(v) for v in value.split(","))
            elif key == "p":
                fields["p_values"] = tuple(float(v) for v in value.split(","))
            elif key == "trials":
                fields["trials"] = int(value)
            elif key == "seed":
                fields["seed"] = int(value)
            elif key == "methods":
                fields["methods"] = tuple(v.strip() for v in value.split(","))
            elif key == "out":
                fields["out_path"] = value
            elif key == "exact_guard":
                fields["exact_guard"] = int(value)
            elif key == "timing":
                fields["timing"] = _parse_bool(value, key)
            elif key == "threads":
                fields["threads"] = int(value)
            elif key.startswith("budget_") and key.endswith("_ms"):
                budgets[key[len("budget_"):-len("_ms")]] = int(value)
            else:
                raise ParameterError(f"config line {line_no}: unknown key {key!r}")
        except ValueError as exc:
            raise ParameterError(f"config line {line_no}: {exc}") from None
    if budgets:
        fields["budgets"] = budgets
    try:
        return SweepConfig(**fields)  # type: ignore[arg-type]
    except TypeError as exc:
        raise ParameterError(f"incomplete config: {exc}") from None


@dataclass(frozen=True)
class SweepRow:
    """One CSV row: one method's result on one sampled graph."""

    n: int
    x: float | None
    p: float
    seed: int
    trial: int
    method: str
    colors: int | None
    valid: bool | None
    lower_bound: int | None
    elapsed_ms: float | None
    status: str
    regime: str


def _cell_str(value: object) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _regime_cell(n: int, p: float) -> str:
    try:
        report = classify_regime(n, p=p)
    except ParameterError:
        return ""
    if report.exponent_prediction is None:
        return report.label
    return f"{report.label}:{report.exponent_prediction:.6g}"


def _run_method(
    g: Graph, method: str, p_cell: float, budget_ms: int | None
) -> tuple[int | None, bool | None, int | None, str]:
    """Run one method; return (colors, valid, lower_bound, status)."""
    try:
        if method == "mcf":
            result = solver.exact_mcf(g, budget_ms=budget_ms)
            return result.size, None, result.chi_lower, "ok"
        if method == "exact":
            colouring = solver.exact_clique_chromatic(g, budget_ms=budget_ms)
            return colouring.palette, True, colouring.palette, "ok"
        if method == "domset":
            colouring = constructors.greedy_domset_colouring(g)
        elif method == "trifree":
            colouring = constructors.trifree_decomposition_colouring(g)
        elif method == "dense":
            params = None
            if g.n >= 3:
                p_est = min(1.0 - 1e-12, max(1e-12, p_cell))
                params = constructors.dense_schedule(g.n, p_est)
            colouring = constructors.dense_two_phase_colouring(g, params)
        else:  # portfolio
            hint = p_cell if 0.0 < p_cell <= 1.0 else None
            colouring = constructors.portfolio_colouring(g, p_hint=hint)
        report = solver.validate(g, colouring)
        return colouring.palette, report.valid, None, "ok"
    except BudgetExceededError as exc:
        return None, None, exc.lower, "timeout"
    except (ParameterError, CliqueOverflowError):
        return None, None, None, "error"


def _cell_rows(config: SweepConfig, n: int, idx: int, trial: int) -> list[SweepRow]:
    trial_seed = keyed_hash(config.seed, n, idx, trial)
    if config.x_values is not None:
        params = GnpParams(n=n, x=config.x_values[idx], seed=trial_seed)
    else:
        params = GnpParams(n=n, p=config.p_values[idx], seed=trial_seed)
    g = sample_gnp(params)
    p_cell = params.probability
    regime = _regime_cell(n, p_cell)
    rows = []
    for method in sorted(config.methods):
        start = time.perf_counter()
        colors, valid, lower, status = _run_method(g, method, p_cell, config.budgets.get(method))
        elapsed = (time.perf_counter() - start) * 1000.0 if config.timing else None
        rows.append(SweepRow(
            n=n, x=params.exponent, p=p_cell, seed=trial_seed, trial=trial,
            method=method, colors=colors, valid=valid, lower_bound=lower,
            elapsed_ms=elapsed, status=status, regime=regime,
        ))
    return rows


def run_sweep(config: SweepConfig) -> list[SweepRow]:
    """Run the full grid and atomically write ``config.out_path``.

    Rows come back in canonical order (n, grid index, trial, method), so a
    rerun with timing disabled writes a byte-identical file.  The thread
    count is ``config.threads`` when set, else the CLIQUECOLOUR_THREADS
    environment variable, else 1; each task is one sampled graph with all
    methods run on it.
    """
    xp_count = len(config.x_values if config.x_values is not None else config.p_values)
    tasks = [
        (n, idx, trial)
        for n in sorted(config.n_values)
        for idx in range(xp_count)
        for trial in range(config.trials)
    ]
    threads = config.threads
    if threads is None:
        threads = int(os.environ.get(THREADS_ENV, "1"))
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            chunks = list(pool.map(lambda t: _cell_rows(config, *t), tasks))
    else:
        chunks = [_cell_rows(config, *task) for task in tasks]
    rows = [row for chunk in chunks for row in chunk]
    write_rows(config.out_path, rows)
    return rows


def write_rows(path: str, rows: list[SweepRow]) -> None:
    """Write rows as CSV via a temp file and an atomic rename."""
    out_dir = os.path.dirname(os.path.abspath(path))
    fd, tmp_path = tempfile.mkstemp(dir=out_dir, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="") as handle:
            writer = csv.writer(handle, lineterminator="\n")
            writer.writerow(CSV_HEADER)
            for row in rows:
                writer.writerow([
                    _cell_str(v) for v in (
                        row.n, row.x, row.p, row.seed, row.trial, row.method,
                        row.colors, row.valid, row.lower_bound, row.elapsed_ms,
                        row.status, row.regime,
                    )
                ])
        os.replace(tmp_path, path)
    except BaseException:
        if os.path.exists(tmp_path):
            os.unlink(tmp_path)
        raise


def read_rows(path: str) -> list[SweepRow]:
    """Read a sweep CSV back into typed rows (inverse of ``write_rows``)."""
    with open(path, newline="") as handle:
        reader = csv.reader(handle)
        header = tuple(next(reader, ()))
        if header != CSV_HEADER:
            raise ParameterError(f"unexpected CSV header {header!r}")
        rows = []
        for record in reader:
            if len(record) != len(CSV_HEADER):
                raise ParameterError(f"row has {len(record)} fields, expected {len(CSV_HEADER)}")
            (n, x, p, seed, trial, method, colors, valid,
             lower, elapsed, status, regime) = record
            rows.append(SweepRow(
                n=int(n),
                x=float(x) if x else None,
                p=float(p),
                seed=int(seed),
                trial=int(trial),
                method=method,
                colors=int(colors) if colors else None,
                valid={"true": True, "false": False}[valid] if valid else None,
                lower_bound=int(lower) if lower else None,
                elapsed_ms=float(elapsed) if elapsed else None,
                status=status,
                regime=regime,
            ))
    return rows


def _exact_block(g: Graph, budget_ms: int | None) -> dict:
    block: dict[str, object] = {}

    def attempt(name: str, fn) -> None:
        try:
            block[name] = {"status": "ok", "value": fn()}
        except BudgetExceededError as exc:
            entry: dict[str, object] = {"status": "timeout"}
            if exc.lower is not None:
                entry["lower"] = exc.lower
            if exc.upper is not None:
                entry["upper"] = exc.upper
            block[name] = entry

    attempt("clique_chromatic", lambda: solver.exact_clique_chromatic(g, budget_ms=budget_ms).palette)
    attempt("chromatic", lambda: solver.exact_chromatic(g, budget_ms=budget_ms).palette)

    def mcf_value() -> dict[str, int]:
        result = solver.exact_mcf(g, budget_ms=budget_ms)
        return {"size": result.size, "chi_lower": result.chi_lower}

    attempt("mcf", mcf_value)
    return block


def per_graph_report(
    g: Graph,
    p_hint: float | None = None,
    budget_ms: int | None = 10_000,
    exact_guard: int = DEFAULT_EXACT_GUARD,
) -> dict:
    """Bundle portfolio result, regime classification, edge/triangle stats,
    and (for graphs up to ``exact_guard`` vertices) exact quantities.

    Returns a JSON-serializable dict.  Exact sub-computations that exhaust
    the budget are reported in-band with status "timeout" instead of
    raising.
    """
    denom = g.n * (g.n - 1) / 2
    p_est = p_hint if p_hint is not None else (g.m / denom if denom else 0.0)

    colouring = constructors.portfolio_colouring(g, p_hint=p_est if 0.0 < p_est <= 1.0 else None)
    report: dict[str, object] = {
        "n": g.n,
        "m": g.m,
        "portfolio": {
            "colors": colouring.palette,
            "method": colouring.method,
            "valid": solver.validate(g, colouring).valid,
        },
    }

    try:
        regime = classify_regime(g.n, p=p_est)
        report["regime"] = {
            "label": regime.label,
            "p": regime.p,
            "x": regime.x,
            "lower_bound": regime.lower_bound,
            "upper_bound": regime.upper_bound,
            "exponent_prediction": regime.exponent_prediction,
            "notes": list(regime.notes),
        }
    except ParameterError as exc:
        report["regime"] = {"label": None, "reason": str(exc)}

    stats = edge_triangle_stats(g)
    report["edge_stats"] = {
        "m": stats.m,
        "max_triangles_per_edge": stats.max_triangles,
        "edges_without_triangle": stats.edges_without_triangle,
        "triangle_total": stats.triangle_total,
    }

    if g.n <= exact_guard:
        report["exact"] = _exact_block(g, budget_ms)
    return report
