"""Maximal clique enumeration and clique-related edge statistics.

Enumeration is Bron-Kerbosch with pivoting over int bitsets, run on an
explicit stack so deep cliques cannot hit the recursion limit.  Everything
downstream (validation, exact solvers, triangle statistics) builds on the
bit-row representation from :mod:`cliquecolour.graph`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bitset import bits, lowest_bit
from .errors import CliqueOverflowError, ParameterError
from .graph import Graph

DEFAULT_MAX_CLIQUES = 10_000_000


@dataclass(frozen=True)
class CliqueSet:
    """All maximal cliques of a graph, sorted lexicographically.

    Size-1 cliques correspond to isolated vertices; they are included and
    also listed separately in ``isolated``.
    """

    cliques: tuple[tuple[int, ...], ...]
    count: int
    max_size: int
    isolated: tuple[int, ...]


def _pivot(g: Graph, p: int, x: int) -> int:
    best, best_cover = -1, -1
    for u in bits(p | x):
        cover = (p & g.rows[u]).bit_count()
        if cover > best_cover:
            best, best_cover = u, cover
    return best


def maximal_clique_masks(g: Graph, max_count: int = DEFAULT_MAX_CLIQUES):
    """Yield every maximal clique of g as a bitmask (unspecified order)."""
    if g.n == 0:
        return
    emitted = 0
    # frame: [R, P, X, candidates-to-try]
    p0 = g.full_mask
    frames = [[0, p0, 0, p0 & ~g.rows[_pivot(g, p0, 0)]]]
    while frames:
        frame = frames[-1]
        if frame[3] == 0:
            frames.pop()
            continue
        v = lowest_bit(frame[3])
        vb = 1 << v
        frame[3] ^= vb
        r2 = frame[0] | vb
        p2 = frame[1] & g.rows[v]
        x2 = frame[2] & g.rows[v]
        frame[1] &= ~vb
        frame[2] |= vb
        if p2 == 0 and x2 == 0:
            emitted += 1
            if emitted > max_count:
                raise CliqueOverflowError(max_count)
            yield r2
        elif p2 != 0:
            cand = p2 & ~g.rows[_pivot(g, p2, x2)]
            if cand:
                frames.append([r2, p2, x2, cand])


def enumerate_maximal_cliques(g: Graph, max_count: int = DEFAULT_MAX_CLIQUES) -> CliqueSet:
    """Enumerate all maximal cliques, including isolated vertices as size-1 cliques."""
    if max_count < 1:
        raise ParameterError("max_count must be positive")
    found = [tuple(bits(mask)) for mask in maximal_clique_masks(g, max_count)]
    found.sort()
    isolated = tuple(c[0] for c in found if len(c) == 1)
    max_size = max((len(c) for c in found), default=0)
    return CliqueSet(tuple(found), len(found), max_size, isolated)


@dataclass(frozen=True)
class EdgeStats:
    """Per-edge clique statistics.

    ``triangles_per_edge`` maps each edge (u, v), u < v, to the number of
    triangles through it (equivalently |N(u) & N(v)|).  When a clique order
    k was requested, ``k1_per_edge`` counts the (k+1)-cliques through each
    edge instead.
    """

    m: int
    triangles_per_edge: dict[tuple[int, int], int]
    max_triangles: int
    edges_without_triangle: int
    triangle_total: int
    k: int | None = None
    k1_per_edge: dict[tuple[int, int], int] | None = None
    max_k1: int | None = None


def edge_triangle_stats(g: Graph) -> EdgeStats:
    """Count triangles through every edge.

    The sum over edges equals 3x the number of triangles, which tests use as
    a consistency check.
    """
    per_edge: dict[tuple[int, int], int] = {}
    worst = 0
    bare = 0
    total = 0
    for u, v in g.edges():
        t = (g.rows[u] & g.rows[v]).bit_count()
        per_edge[(u, v)] = t
        total += t
        if t > worst:
            worst = t
        if t == 0:
            bare += 1
    assert total % 3 == 0
    return EdgeStats(g.m, per_edge, worst, bare, total // 3)


def count_cliques_in_mask(g: Graph, mask: int, k: int) -> int:
    """Number of k-cliques whose vertices all lie inside ``mask`` (k >= 1)."""
    if k == 1:
        return mask.bit_count()
    if mask.bit_count() < k:
        return 0
    total = 0
    for v in bits(mask):
        higher = mask & g.rows[v] & ~((1 << (v + 1)) - 1)
        total += count_cliques_in_mask(g, higher, k - 1)
    return total


def count_k_cliques_in_subset(g: Graph, vertices, k: int) -> int:
    """Count k-cliques inside the given vertex subset exactly."""
    if k < 2:
        raise ParameterError("k must be at least 2")
    mask = 0
    for v in vertices:
        if not 0 <= v < g.n:
            raise ParameterError(f"vertex {v} out of range")
        mask |= 1 << v
    return count_cliques_in_mask(g, mask, k)


def k1_cliques_per_edge(g: Graph, k: int) -> EdgeStats:
    """Count the (k+1)-cliques through each edge (k >= 2).

    A (k+1)-clique through edge (u, v) is a (k-1)-clique inside the common
    neighbourhood N(u) & N(v).
    """
    if k < 2:
        raise ParameterError("k must be at least 2")
    base = edge_triangle_stats(g)
    per_edge: dict[tuple[int, int], int] = {}
    worst = 0
    for u, v in g.edges():
        common = g.rows[u] & g.rows[v]
        cnt = count_cliques_in_mask(g, common, k - 1)
        per_edge[(u, v)] = cnt
        if cnt > worst:
            worst = cnt
    return EdgeStats(
        g.m,
        base.triangles_per_edge,
        base.max_triangles,
        base.edges_without_triangle,
        base.triangle_total,
        k=k,
        k1_per_edge=per_edge,
        max_k1=worst,
    )


def dense_set_ratio(g: Graph, vertices) -> Fraction:
    """Edge density e(G[W]) / (|W| - 2) of a vertex set W, as an exact rational."""
    vset = set(vertices)
    if len(vset) < 3:
        raise ParameterError("need at least 3 vertices")
    mask = 0
    for v in vset:
        if not 0 <= v < g.n:
            raise ParameterError(f"vertex {v} out of range")
        mask |= 1 << v
    inner = sum((g.rows[v] & mask).bit_count() for v in bits(mask)) // 2
    return Fraction(inner, len(vset) - 2)
