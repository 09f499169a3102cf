"""Constructive clique colourings for random and structured graphs.

Four schemes, each valid by construction:

* dominating-set rounds: colour i goes to the uncoloured neighbours of the
  i-th member of a dominating set, leftovers (an independent subset of the
  set) get colour 0;
* greedy dominating-set: the same rounds driven by a greedy maximal
  independent set;
* triangle-free decomposition: classes are grown so that each stays
  triangle-free and never swallows an edge that is a maximal clique of the
  whole graph, so no class can contain a monochromatic maximal clique;
* dense two-phase: an independent seed set cut off at a size target derived
  from n and p, dominating rounds, and one overflow colour for undominated
  leftovers, with a guaranteed-valid recolouring fallback.

A portfolio runner tries the applicable schemes and keeps the smallest
valid palette.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .bitset import bits
from .errors import ParameterError
from .graph import Graph
from .solver import Colouring, validate


def _vertex_order(n: int, order_seed: int | None) -> list[int]:
    order = list(range(n))
    if order_seed is not None:
        random.Random(order_seed).shuffle(order)
    return order


def greedy_mis(g: Graph, order: Sequence[int] | None = None) -> list[int]:
    """Greedy maximal independent set, returned in insertion order."""
    if order is None:
        order = range(g.n)
    taken_mask = 0
    taken: list[int] = []
    for v in order:
        if not 0 <= v < g.n:
            raise ParameterError(f"vertex {v} out of range")
        if g.rows[v] & taken_mask == 0 and not taken_mask >> v & 1:
            taken_mask |= 1 << v
            taken.append(v)
    return taken


def dominating_set_colouring(g: Graph, dominating: Sequence[int]) -> Colouring:
    """Colour i = still-uncoloured neighbours of the i-th dominating vertex.

    Vertices left over after all rounds must form an independent subset of
    the dominating set; they receive colour 0.  Uses at most len(dominating)
    + 1 colours.  Raises when the set fails to dominate, naming a witness.
    """
    seen = set()
    for v in dominating:
        if not 0 <= v < g.n:
            raise ParameterError(f"vertex {v} out of range")
        if v in seen:
            raise ParameterError(f"vertex {v} repeated in dominating set")
        seen.add(v)
    colour = [-1] * g.n
    for i, v in enumerate(dominating, start=1):
        for w in bits(g.rows[v]):
            if colour[w] == -1:
                colour[w] = i
    for v in range(g.n):
        if colour[v] == -1:
            if v not in seen:
                raise ParameterError(f"vertex {v} is not dominated")
            colour[v] = 0
    return Colouring.make(colour, "domset")


def greedy_domset_colouring(g: Graph, order_seed: int | None = None) -> Colouring:
    """Dominating-set colouring driven by a greedy maximal independent set.

    Isolated vertices end up in the independent set and receive colour 0.
    """
    mis = greedy_mis(g, _vertex_order(g.n, order_seed))
    return dominating_set_colouring(g, mis)


@dataclass(frozen=True)
class TriFreeParams:
    """Tuning for the triangle-free decomposition.

    ``eta`` scales the per-class size target and ``beta`` the remaining-pool
    threshold used by the staged schedule; ``p`` is the edge probability the
    schedule should assume (estimated from the graph when omitted).  With
    ``staged_schedule`` False, classes are simply grown maximally.
    """

    eta: float = 0.5
    beta: float = 0.2
    p: float | None = None
    staged_schedule: bool = False

    def __post_init__(self):
        if not 0.0 < self.eta < 0.7:
            raise ParameterError(f"eta must be in (0, 0.7), got {self.eta}")
        if not 0.0 < self.beta < 0.25:
            raise ParameterError(f"beta must be in (0, 0.25), got {self.beta}")
        if self.p is not None and not 0.0 < self.p <= 1.0:
            raise ParameterError(f"p must be in (0, 1], got {self.p}")


def _grow_triangle_free(g: Graph, pool_order: Iterable[int], target: int | None) -> int:
    """Greedily grow one colour class from the pool, returned as a bitmask.

    A vertex w joins the class A when (i) A + w stays triangle-free and
    (ii) every edge from w into A has a common neighbour somewhere in g, so
    no edge inside the class is a maximal clique.
    """
    rows = g.rows
    a_mask = 0
    size = 0
    for w in pool_order:
        inside = a_mask & rows[w]
        ok = True
        other = inside
        while other:
            low = other & -other
            u = low.bit_length() - 1
            other ^= low
            if rows[u] & inside or rows[u] & rows[w] == 0:
                ok = False
                break
        if ok:
            a_mask |= 1 << w
            size += 1
            if target is not None and size >= target:
                break
    return a_mask


def trifree_decomposition_colouring(g: Graph, params: TriFreeParams | None = None) -> Colouring:
    """Partition into triangle-free classes with no internal maximal-clique edge.

    Every clique inside a class has at most two vertices and, by the growth
    guard, extends outside the class, so the colouring is always valid.  In
    staged mode the first classes are cut off at a size target j0 scaled by
    eta * p**-1.5 * sqrt(ln n), mid-game classes are drawn from windows of
    about p**-1.5 candidates, and the last few survivors (below ln^2 n) get
    singleton colours.
    """
    params = params or TriFreeParams()
    remaining = list(range(g.n))
    colour = [-1] * g.n
    next_colour = 0

    def take(mask: int) -> None:
        nonlocal next_colour, remaining
        for v in bits(mask):
            colour[v] = next_colour
        next_colour += 1
        remaining = [v for v in remaining if colour[v] == -1]

    if params.staged_schedule and g.n >= 3:
        p = params.p
        if p is None:
            p = 2.0 * g.m / (g.n * (g.n - 1))
        if p > 0.0:
            ln_n = math.log(g.n)
            j0 = max(1, round(params.eta * p**-1.5 * math.sqrt(ln_n)))
            pool_floor = p**-1.5 * g.n**params.beta
            window = max(1, math.ceil(p**-1.5))
            survivors = ln_n**2
            while len(remaining) >= pool_floor:
                take(_grow_triangle_free(g, remaining, j0))
            while len(remaining) >= survivors:
                take(_grow_triangle_free(g, remaining[:window], None))
            for v in list(remaining):
                take(1 << v)
            return Colouring.make(colour, "trifree")

    while remaining:
        take(_grow_triangle_free(g, remaining, None))
    return Colouring.make(colour, "trifree")


@dataclass(frozen=True)
class DenseParams:
    """Size target for the dense scheme's independent seed set.

    ``gamma`` and ``k_stop`` follow from (n, p) via :func:`dense_schedule`;
    pass them explicitly to override.
    """

    p: float
    gamma: float
    k_stop: int

    def __post_init__(self):
        if not 0.0 < self.p < 1.0:
            raise ParameterError(f"p must be in (0, 1), got {self.p}")
        if self.k_stop < 1:
            raise ParameterError("k_stop must be at least 1")


def dense_schedule(n: int, p: float) -> DenseParams:
    """Derive gamma and the greedy stop size k_stop from (n, p).

    k_stop = ceil((1/2 + gamma) * log base 1/(1-p) of n) with
    gamma = 2 * log_{1/p}(ln n) / log_{1/p}(n).
    """
    if n < 3:
        raise ParameterError("dense schedule needs n >= 3")
    if not 0.0 < p < 1.0:
        raise ParameterError(f"p must be in (0, 1), got {p}")
    ln_n = math.log(n)
    gamma = 2.0 * math.log(math.log(n)) / ln_n
    k_stop = max(1, math.ceil((0.5 + gamma) * ln_n / -math.log1p(-p)))
    return DenseParams(p, gamma, k_stop)


def dense_two_phase_colouring(g: Graph, params: DenseParams | None = None) -> Colouring:
    """Two-phase colouring for dense graphs: greedy seed set, then rounds.

    Grows a greedy independent set A in index order, stopping at k_stop.
    Dominating rounds colour the neighbours of each seed; seeds left
    uncoloured get colour 0 and any undominated leftovers share one extra
    colour, for at most k_stop + 2 colours.  If the greedy set reaches
    maximality before k_stop it dominates everything and the scheme reduces
    to the greedy dominating-set colouring.  The leftover class is the only
    one that can fail validation; if it does, it is recoloured with fresh
    colours by the dominating-set scheme on its induced subgraph (method
    label gains a ``+fallback`` suffix).
    """
    if g.n == 0:
        return Colouring((), 0, "dense")
    if g.m == 0:
        return Colouring.make([0] * g.n, "dense")
    if params is None:
        if g.n < 3:
            base = greedy_domset_colouring(g)
            return Colouring(base.assignment, base.palette, "dense")
        est = 2.0 * g.m / (g.n * (g.n - 1))
        params = dense_schedule(g.n, min(max(est, 1e-12), 1.0 - 1e-12))

    seeds: list[int] = []
    seed_mask = 0
    for v in range(g.n):
        if g.rows[v] & seed_mask == 0:
            seeds.append(v)
            seed_mask |= 1 << v
            if len(seeds) >= params.k_stop:
                break

    colour = [-1] * g.n
    for i, v in enumerate(seeds, start=1):
        for w in bits(g.rows[v]):
            if colour[w] == -1:
                colour[w] = i
    leftover = []
    for v in range(g.n):
        if colour[v] == -1:
            if seed_mask >> v & 1:
                colour[v] = 0
            else:
                leftover.append(v)
    if not leftover:
        return Colouring.make(colour, "dense")

    extra = len(seeds) + 1
    for v in leftover:
        colour[v] = extra
    candidate = Colouring.make(colour, "dense")
    if validate(g, candidate).valid:
        return candidate

    sub, back = induced_subgraph(g, leftover)
    subcol = greedy_domset_colouring(sub)
    for local, v in enumerate(back):
        colour[v] = extra + subcol.assignment[local]
    return Colouring.make(colour, "dense+fallback")


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> tuple[Graph, list[int]]:
    """Induced subgraph plus the local-to-original vertex map."""
    back = sorted(set(vertices))
    index = {v: i for i, v in enumerate(back)}
    edges = []
    for i, v in enumerate(back):
        for w in bits(g.rows[v]):
            j = index.get(w)
            if j is not None and i < j:
                edges.append((i, j))
    return Graph.from_edges(len(back), edges), back


PORTFOLIO_DENSE_MIN_P = 0.05


def portfolio_colouring(
    g: Graph,
    p_hint: float | None = None,
    seed: int | None = None,
) -> Colouring:
    """Run the applicable schemes and keep the smallest valid palette.

    Always tries the greedy dominating-set and triangle-free schemes; adds
    the dense scheme when p_hint suggests it can pay off (p_hint >= 0.05).
    Ties go to the earlier scheme in that fixed order.  The method label
    records the winner.
    """
    tri_p = p_hint if p_hint is not None and 0.0 < p_hint <= 1.0 else None
    attempts: list[Colouring] = [
        greedy_domset_colouring(g, order_seed=seed),
        trifree_decomposition_colouring(g, TriFreeParams(p=tri_p)),
    ]
    if p_hint is not None and PORTFOLIO_DENSE_MIN_P <= p_hint < 1.0 and g.n >= 3:
        attempts.append(dense_two_phase_colouring(g, dense_schedule(g.n, p_hint)))

    best: Colouring | None = None
    for col in attempts:
        if not validate(g, col).valid:
            continue
        if best is None or col.palette < best.palette:
            best = col
    if best is None:
        raise RuntimeError("no scheme produced a valid colouring; unreachable")
    winner = best.method.split("+")[0]
    return Colouring(best.assignment, best.palette, f"portfolio:{winner}")
