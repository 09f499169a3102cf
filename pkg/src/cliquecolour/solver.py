"""Clique-colouring validation, exact solvers, and lower bounds.

A colouring is valid when no maximal clique with at least two vertices is
monochromatic; isolated vertices are unconstrained.  Validation searches each
colour class for a monochromatic clique with empty common neighbourhood
instead of enumerating all maximal cliques of the graph, so it stays exact
while handling graphs whose full clique census is astronomically large.

The exact solvers are small-instance branch and bound searches over the
maximal-clique hypergraph and are meant for cross-checking the constructive
colourings, not for production-size graphs.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

from .bitset import bits, lowest_bit, mask_of
from .cliques import DEFAULT_MAX_CLIQUES, maximal_clique_masks
from .errors import BudgetExceededError, CliqueOverflowError, ParameterError
from .graph import Graph

EXACT_GUARD = 40
_TICK = 4096  # budget-check period, in search nodes


@dataclass(frozen=True)
class Colouring:
    """A vertex colouring: assignment[v] is the colour of vertex v."""

    assignment: tuple[int, ...]
    palette: int
    method: str

    @staticmethod
    def make(assignment, method: str) -> "Colouring":
        assignment = tuple(assignment)
        return Colouring(assignment, len(set(assignment)), method)


@dataclass(frozen=True)
class ValidationReport:
    valid: bool
    witness: tuple[int, ...] | None


@dataclass(frozen=True)
class McfResult:
    """Largest vertex set containing no maximal clique of size >= 2."""

    size: int
    vertices: tuple[int, ...]
    chi_lower: int


class _Deadline:
    def __init__(self, what: str, budget_ms: float | None):
        self.what = what
        self.expiry = None if budget_ms is None else time.monotonic() + budget_ms / 1000.0
        self.ticks = 0

    def tick(self, lower=None, upper=None):
        self.ticks += 1
        if self.expiry is not None and self.ticks % _TICK == 1:
            if time.monotonic() > self.expiry:
                raise BudgetExceededError(self.what, lower=lower, upper=upper)


def _class_witness(g: Graph, class_mask: int, node_budget: int) -> int | None:
    """Find a clique inside ``class_mask`` (size >= 2) that is maximal in g.

    Returns the clique as a bitmask, or None when no such clique exists.
    Walks the maximal cliques of the induced subgraph, tracking the common
    neighbourhood in the whole graph; a branch is abandoned as soon as some
    outside vertex is adjacent to every remaining candidate, since that
    vertex would extend any clique the branch can produce.
    """
    if class_mask.bit_count() < 2:
        return None
    rows = g.rows

    common = g.full_mask
    for v in bits(class_mask):
        common &= rows[v]
        if common == 0:
            break
    if common != 0:
        return None  # one vertex extends every clique in the class

    nodes = 0
    # frame: [R, P, X, candidates, ext]; P, X, candidates stay inside the class
    frames: list[list[int]] = [[0, class_mask, 0, class_mask, g.full_mask]]
    while frames:
        frame = frames[-1]
        if frame[3] == 0:
            frames.pop()
            continue
        nodes += 1
        if nodes > node_budget:
            raise CliqueOverflowError(node_budget)
        v = lowest_bit(frame[3])
        vb = 1 << v
        frame[3] ^= vb
        r2 = frame[0] | vb
        p2 = frame[1] & rows[v]
        x2 = frame[2] & rows[v]
        ext2 = frame[4] & rows[v]
        frame[1] &= ~vb
        frame[2] |= vb
        if ext2 == 0:
            if r2.bit_count() >= 2:
                return r2
            continue  # a vertex isolated in g; not a constraint
        if p2 == 0:
            continue  # maximal in the class but extendable in g
        # outside vertex covering all remaining candidates => no witness below
        outside = ext2 & ~class_mask
        covered = False
        for _ in range(4):
            if outside == 0:
                break
            w = lowest_bit(outside)
            outside &= outside - 1
            if p2 & ~rows[w] == 0:
                covered = True
                break
        if covered:
            continue
        pivot, best_cover = -1, -1
        for u in bits(p2 | x2):
            cover = (p2 & rows[u]).bit_count()
            if cover > best_cover:
                pivot, best_cover = u, cover
        cand = p2 & ~rows[pivot]
        if cand:
            frames.append([r2, p2, x2, cand, ext2])
    return None


def validate(g: Graph, colouring: Colouring, node_budget: int = DEFAULT_MAX_CLIQUES) -> ValidationReport:
    """Check that no maximal clique of size >= 2 is monochromatic."""
    if len(colouring.assignment) != g.n:
        raise ParameterError(
            f"colouring has {len(colouring.assignment)} entries for {g.n} vertices"
        )
    classes: dict[int, int] = {}
    for v, c in enumerate(colouring.assignment):
        classes[c] = classes.get(c, 0) | (1 << v)
    for mask in classes.values():
        witness = _class_witness(g, mask, node_budget)
        if witness is not None:
            return ValidationReport(False, tuple(bits(witness)))
    return ValidationReport(True, None)


def _collect_hyperedges(g: Graph, max_cliques: int) -> list[int]:
    """Masks of all maximal cliques with at least two vertices."""
    return [mask for mask in maximal_clique_masks(g, max_cliques) if mask.bit_count() >= 2]


def _feasible_colouring(
    n: int,
    hyperedges: list[int],
    k: int,
    deadline: _Deadline,
    bounds: tuple,
) -> list[int] | None:
    """Search for an assignment of k colours with no hyperedge monochromatic.

    Branches on the vertex in the most unsatisfied hyperedges (ties to the
    lowest index).  Colour symmetry is broken by pinning the first constrained
    vertex to colour 0 and never opening a colour index beyond max-used + 1.
    """
    edge_verts = [tuple(bits(mask)) for mask in hyperedges]
    vertex_edges: list[list[int]] = [[] for _ in range(n)]
    for idx, verts in enumerate(edge_verts):
        for v in verts:
            vertex_edges[v].append(idx)

    colour = [-1] * n
    uncoloured = [len(verts) for verts in edge_verts]
    first_col = [-1] * len(hyperedges)
    satisfied = [False] * len(hyperedges)

    constrained = sorted({v for verts in edge_verts for v in verts})
    if not constrained:
        return [0] * n
    pinned = constrained[0]
    colour[pinned] = 0
    for idx in vertex_edges[pinned]:
        uncoloured[idx] -= 1
        first_col[idx] = 0
    todo = [v for v in constrained if v != pinned]

    def pick() -> int:
        best_v, best_score = -1, -1
        for v in todo:
            if colour[v] >= 0:
                continue
            score = sum(1 for idx in vertex_edges[v] if not satisfied[idx])
            if score > best_score:
                best_v, best_score = v, score
        return best_v

    def assign(v: int, c: int) -> list[tuple[int, int, bool]] | None:
        """Apply v := c; return an undo trail, or None when a hyperedge goes fully monochromatic."""
        trail = []
        for idx in vertex_edges[v]:
            if satisfied[idx]:
                continue
            if first_col[idx] == -1:
                trail.append((idx, -1, False))
                first_col[idx] = c
                uncoloured[idx] -= 1
            elif first_col[idx] != c:
                trail.append((idx, first_col[idx], True))
                satisfied[idx] = True
                uncoloured[idx] -= 1
            else:
                if uncoloured[idx] == 1:
                    for undo_idx, old_first, was_sat in reversed(trail):
                        uncoloured[undo_idx] += 1
                        if was_sat:
                            satisfied[undo_idx] = False
                        else:
                            first_col[undo_idx] = old_first
                    return None
                trail.append((idx, c, False))
                uncoloured[idx] -= 1
        return trail

    def undo(v: int, trail) -> None:
        for idx, old_first, was_sat in reversed(trail):
            uncoloured[idx] += 1
            if was_sat:
                satisfied[idx] = False
            else:
                first_col[idx] = old_first

    def dfs(assigned: int, max_used: int) -> bool:
        deadline.tick(*bounds)
        if assigned == len(todo):
            return True
        v = pick()
        for c in range(min(max_used + 1, k - 1) + 1):
            trail = assign(v, c)
            if trail is None:
                continue
            colour[v] = c
            if dfs(assigned + 1, max(max_used, c)):
                return True
            colour[v] = -1
            undo(v, trail)
        return False

    if dfs(0, 0):
        for v in range(n):
            if colour[v] < 0:
                colour[v] = 0
        return colour
    return None


def _greedy_clique_size(g: Graph) -> int:
    best = 0
    for start in range(g.n):
        mask = 1 << start
        cand = g.rows[start]
        while cand:
            v, best_deg = -1, -1
            for u in bits(cand):
                d = (cand & g.rows[u]).bit_count()
                if d > best_deg:
                    v, best_deg = u, d
            mask |= 1 << v
            cand &= g.rows[v]
        best = max(best, mask.bit_count())
        if best == g.n:
            break
    return best


def exact_clique_chromatic(
    g: Graph,
    budget_ms: float | None = None,
    max_cliques: int = DEFAULT_MAX_CLIQUES,
    upper_hint: int | None = None,
) -> Colouring:
    """Minimum number of colours with no monochromatic maximal clique.

    Returns a witness colouring whose palette is the clique chromatic number.
    Raises BudgetExceededError with the bracketing bounds when the time
    budget runs out first.
    """
    if g.n == 0:
        return Colouring((), 0, "exact")
    hyperedges = _collect_hyperedges(g, max_cliques)
    if not hyperedges:
        return Colouring.make([0] * g.n, "exact")
    deadline = _Deadline("exact clique chromatic number", budget_ms)
    upper = upper_hint if upper_hint is not None else g.n
    k = 2
    while True:
        sol = _feasible_colouring(g.n, hyperedges, k, deadline, (k, upper))
        if sol is not None:
            return Colouring.make(sol, "exact")
        k += 1
        if k > g.n:
            raise RuntimeError("no valid colouring found with n colours; unreachable")


def exact_chromatic(
    g: Graph,
    budget_ms: float | None = None,
    guard: int = EXACT_GUARD,
) -> Colouring:
    """Exact chromatic number by the same search over single edges."""
    if g.n > guard:
        raise ParameterError(f"n={g.n} exceeds the exact-solver guard {guard}")
    if g.n == 0:
        return Colouring((), 0, "exact-chi")
    edges = [(1 << u) | (1 << v) for u, v in g.edges()]
    if not edges:
        return Colouring.make([0] * g.n, "exact-chi")
    deadline = _Deadline("exact chromatic number", budget_ms)
    k = _greedy_clique_size(g)
    while True:
        sol = _feasible_colouring(g.n, edges, k, deadline, (k, g.n))
        if sol is not None:
            return Colouring.make(sol, "exact-chi")
        k += 1


def exact_mcf(
    g: Graph,
    budget_ms: float | None = None,
    guard: int = EXACT_GUARD,
    max_cliques: int = DEFAULT_MAX_CLIQUES,
) -> McfResult:
    """Largest set containing no maximal clique of size >= 2, by branch and bound.

    Also reports ceil(n / size) as the implied clique-chromatic lower bound:
    every colour class of a valid colouring is such a set.
    """
    if g.n > guard:
        raise ParameterError(f"n={g.n} exceeds the exact-solver guard {guard}")
    if g.n == 0:
        return McfResult(0, (), 0)
    hyperedges = _collect_hyperedges(g, max_cliques)
    hyperedges.sort(key=lambda m: m.bit_count())
    deadline = _Deadline("exact mcf", budget_ms)
    n = g.n

    # greedy start: repeatedly delete the vertex covering the most live hyperedges
    removed = 0
    live = list(hyperedges)
    while live:
        counts: dict[int, int] = {}
        for mask in live:
            for v in bits(mask):
                counts[v] = counts.get(v, 0) + 1
        v = max(counts, key=lambda u: (counts[u], -u))
        removed |= 1 << v
        live = [mask for mask in live if mask & removed == 0]
    best_mask = g.full_mask & ~removed
    best_size = best_mask.bit_count()

    def dfs(removed: int, kept: int) -> None:
        nonlocal best_mask, best_size
        deadline.tick(best_size if best_size else None, None)
        if n - removed.bit_count() <= best_size:
            return
        violated = next((m for m in hyperedges if m & removed == 0), None)
        if violated is None:
            best_mask = g.full_mask & ~removed
            best_size = best_mask.bit_count()
            return
        forced_kept = kept
        for v in bits(violated):
            if forced_kept >> v & 1:
                continue
            dfs(removed | (1 << v), forced_kept)
            forced_kept |= 1 << v

    dfs(0, 0)
    chi_lower = math.ceil(g.n / best_size) if best_size else 0
    return McfResult(best_size, tuple(bits(best_mask)), chi_lower)


def independence_number(
    g: Graph,
    budget_ms: float | None = None,
    guard: int = EXACT_GUARD,
) -> int:
    """Exact maximum independent set size (small-instance branch and bound)."""
    if g.n > guard:
        raise ParameterError(f"n={g.n} exceeds the exact-solver guard {guard}")
    if g.n == 0:
        return 0
    deadline = _Deadline("independence number", budget_ms)
    best = 0

    def dfs(cand: int, size: int) -> None:
        nonlocal best
        deadline.tick(best, None)
        if size + cand.bit_count() <= best:
            return
        if cand == 0:
            best = max(best, size)
            return
        v, best_deg = -1, -1
        for u in bits(cand):
            d = (cand & g.rows[u]).bit_count()
            if d > best_deg:
                v, best_deg = u, d
        if best_deg == 0:
            best = max(best, size + cand.bit_count())
            return
        vb = 1 << v
        dfs((cand & ~g.rows[v]) & ~vb, size + 1)
        dfs(cand & ~vb, size)

    dfs(g.full_mask, 0)
    return best


def triangle_vertex_count(g: Graph) -> int:
    """Number of vertices lying in at least one triangle."""
    count = 0
    for u in range(g.n):
        row = g.rows[u]
        for v in bits(row):
            if row & g.rows[v]:
                count += 1
                break
    return count


def sparse_lower_bound(
    g: Graph,
    budget_ms: float | None = None,
    guard: int = EXACT_GUARD,
) -> int:
    """Lower bound ceil((n - t) / alpha) with t = vertices in triangles.

    Restricting any colour class to the triangle-free part leaves an
    independent set there, which forces this many classes.  Returns 0 when
    every vertex is in a triangle (the bound is vacuous).
    """
    t = triangle_vertex_count(g)
    if g.n == 0 or t >= g.n:
        return 0
    alpha = independence_number(g, budget_ms=budget_ms, guard=guard)
    return math.ceil((g.n - t) / alpha)
