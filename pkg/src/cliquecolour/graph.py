"""Bit-packed undirected simple graphs and reproducible G(n, p) sampling.

Adjacency is one Python-int bit row per vertex, so neighbourhood
intersections and popcounts are single big-int operations.  Sampling decides
each unordered pair {i, j} from a keyed hash of (seed, i, j) alone, so the
result is independent of evaluation order and stable across platforms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from .bitset import bits
from .errors import EdgeListParseError, ParameterError

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


def mix64(x: int) -> int:
    """SplitMix64 finaliser: a bijective 64-bit mixing function."""
    x &= _MASK64
    x = (x ^ (x >> 30)) * _MIX1 & _MASK64
    x = (x ^ (x >> 27)) * _MIX2 & _MASK64
    return x ^ (x >> 31)


def keyed_hash(*parts: int) -> int:
    """Fold integers into one 64-bit value; used to derive per-trial seeds."""
    h = mix64(len(parts))
    for part in parts:
        h = mix64(h ^ (part & _MASK64))
    return h


def pair_uniform(seed: int, counter: int) -> float:
    """Uniform deviate in [0, 1) as a pure function of (seed, counter)."""
    h = mix64((seed + (counter + 1) * _GOLDEN) & _MASK64)
    return (h >> 11) * 2.0**-53


def _pair_uniform_vec(seed: int, counters: np.ndarray) -> np.ndarray:
    """Vectorised pair_uniform over a uint64 array of counters."""
    with np.errstate(over="ignore"):
        x = np.uint64(seed & _MASK64) + (counters + np.uint64(1)) * np.uint64(_GOLDEN)
        x = (x ^ (x >> np.uint64(30))) * np.uint64(_MIX1)
        x = (x ^ (x >> np.uint64(27))) * np.uint64(_MIX2)
        x ^= x >> np.uint64(31)
    return (x >> np.uint64(11)).astype(np.float64) * 2.0**-53


@dataclass(frozen=True)
class Graph:
    """Immutable undirected simple graph on vertices 0..n-1."""

    n: int
    rows: tuple[int, ...]
    m: int

    @staticmethod
    def from_rows(n: int, rows: Iterable[int]) -> "Graph":
        """Build from adjacency bit rows, checking symmetry and no self-loops."""
        rows = tuple(rows)
        if n < 0 or len(rows) != n:
            raise ParameterError(f"expected {n} adjacency rows, got {len(rows)}")
        full = (1 << n) - 1
        for u, row in enumerate(rows):
            if row & ~full:
                raise ParameterError(f"row {u} has bits outside 0..{n - 1}")
            if row >> u & 1:
                raise ParameterError(f"self-loop at vertex {u}")
        for u, row in enumerate(rows):
            for v in bits(row):
                if not rows[v] >> u & 1:
                    raise ParameterError(f"adjacency not symmetric at ({u}, {v})")
        m = sum(row.bit_count() for row in rows) // 2
        return Graph(n, rows, m)

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 0:
            raise ParameterError("n must be nonnegative")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ParameterError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ParameterError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        m = sum(row.bit_count() for row in rows) // 2
        return Graph(n, tuple(rows), m)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def neighbours_mask(self, v: int) -> int:
        return self.rows[v]

    def neighbours(self, v: int) -> tuple[int, ...]:
        return tuple(bits(self.rows[v]))

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges (u, v) with u < v in lexicographic order."""
        for u in range(self.n):
            higher = self.rows[u] >> (u + 1)
            for off in bits(higher):
                yield u, u + 1 + off

    def isolated_mask(self) -> int:
        m = 0
        for v, row in enumerate(self.rows):
            if row == 0:
                m |= 1 << v
        return m


@dataclass(frozen=True)
class GnpParams:
    """Parameters for G(n, p).  Give exactly one of ``p`` or the exponent ``x``.

    When ``x`` is given, p = n**(x - 1), so the expected degree is about n**x.
    """

    n: int
    p: float | None = None
    x: float | None = None
    seed: int = 0

    def __post_init__(self):
        if self.n < 0:
            raise ParameterError("n must be nonnegative")
        if (self.p is None) == (self.x is None):
            raise ParameterError("give exactly one of p or x")
        if self.x is not None and self.n < 2:
            raise ParameterError("exponent form needs n >= 2")
        if self.p is not None and not 0.0 <= self.p <= 1.0:
            raise ParameterError(f"p must be in [0, 1], got {self.p}")

    @property
    def probability(self) -> float:
        if self.p is not None:
            return self.p
        return float(self.n ** (self.x - 1.0))

    @property
    def exponent(self) -> float | None:
        """x with p = n**(x-1); None when undefined (tiny n or p = 0)."""
        if self.x is not None:
            return self.x
        if self.n < 2 or self.p <= 0.0:
            return None
        return 1.0 + math.log(self.p) / math.log(self.n)


def sample_gnp(params: GnpParams) -> Graph:
    """Sample G(n, p) with every pair decided by pair_uniform(seed, i*n + j).

    The decision for {i, j} (i < j) reads counter i*n + j only, so rows can be
    produced in any order or in parallel without changing the graph.
    """
    n, seed = params.n, params.seed
    p = params.probability
    if n <= 1 or p <= 0.0:
        return Graph(n, tuple([0] * n), 0)
    if p >= 1.0:
        full = (1 << n) - 1
        rows = tuple(full ^ (1 << v) for v in range(n))
        return Graph(n, rows, n * (n - 1) // 2)

    rows: list[int] = [0] * n
    jj = np.arange(n, dtype=np.uint64)
    nn = np.uint64(n)
    block = max(1, min(n, (1 << 22) // n))
    for start in range(0, n, block):
        stop = min(start + block, n)
        ii = np.arange(start, stop, dtype=np.uint64)[:, None]
        counters = np.where(jj[None, :] < ii, jj[None, :] * nn + ii, ii * nn + jj[None, :])
        hit = _pair_uniform_vec(seed, counters) < p
        for r in range(start, stop):
            hit[r - start, r] = False
        packed = np.packbits(hit, axis=1, bitorder="little")
        for r in range(start, stop):
            rows[r] = int.from_bytes(packed[r - start].tobytes(), "little")
    m = sum(row.bit_count() for row in rows) // 2
    return Graph(n, tuple(rows), m)


def parse_edge_list(data: bytes | str) -> Graph:
    """Parse the on-disk edge-list format into a Graph.

    Format: optional comment lines starting with "c", one "p edge <n> <m>"
    header, then "e <u> <v>" lines with 1-based endpoints.  Duplicate edge
    lines are idempotent; self-loops and out-of-range endpoints are errors
    that name the offending line.
    """
    if isinstance(data, bytes):
        try:
            text = data.decode("ascii")
        except UnicodeDecodeError as exc:
            raise EdgeListParseError(0, f"not ASCII: {exc}") from None
    else:
        text = data

    n = None
    rows: list[int] = []
    for line_no, raw in enumerate(text.split("\n"), start=1):
        line = raw.rstrip("\r")
        if line == "":
            continue
        tokens = line.split()
        kind = tokens[0]
        if kind == "c":
            continue
        if kind == "p":
            if n is not None:
                raise EdgeListParseError(line_no, "second header line")
            if len(tokens) != 4 or tokens[1] != "edge":
                raise EdgeListParseError(line_no, f"malformed header {line!r}")
            try:
                n, claimed_m = int(tokens[2]), int(tokens[3])
            except ValueError:
                raise EdgeListParseError(line_no, f"non-integer header fields {line!r}") from None
            if n < 0 or claimed_m < 0:
                raise EdgeListParseError(line_no, "negative counts in header")
            rows = [0] * n
            continue
        if kind == "e":
            if n is None:
                raise EdgeListParseError(line_no, "edge before header")
            if len(tokens) != 3:
                raise EdgeListParseError(line_no, f"malformed edge line {line!r}")
            try:
                u, v = int(tokens[1]), int(tokens[2])
            except ValueError:
                raise EdgeListParseError(line_no, f"non-integer endpoints {line!r}") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise EdgeListParseError(line_no, f"vertex out of range 1..{n}")
            if u == v:
                raise EdgeListParseError(line_no, f"self-loop at vertex {u}")
            rows[u - 1] |= 1 << (v - 1)
            rows[v - 1] |= 1 << (u - 1)
            continue
        raise EdgeListParseError(line_no, f"unrecognised line {line!r}")
    if n is None:
        raise EdgeListParseError(0, "missing header")
    m = sum(row.bit_count() for row in rows) // 2
    return Graph(n, tuple(rows), m)


def serialize_edge_list(g: Graph) -> bytes:
    """Serialize to the canonical byte form: header, then sorted 1-based edges."""
    lines = [f"p edge {g.n} {g.m}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return ("\n".join(lines) + "\n").encode("ascii")


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)), n * (n - 1) // 2)


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ParameterError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
