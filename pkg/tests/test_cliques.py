"""Maximal clique enumeration and per-edge clique statistics vs brute force."""

from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cliquecolour.cliques import (
    count_k_cliques_in_subset,
    dense_set_ratio,
    edge_triangle_stats,
    enumerate_maximal_cliques,
    k1_cliques_per_edge,
)
from cliquecolour.errors import CliqueOverflowError, ParameterError
from cliquecolour.graph import Graph, complete_graph, cycle_graph

import oracles

# ------------------------------------------------------------- enumeration


@pytest.mark.parametrize("n", range(1, 11))
@pytest.mark.parametrize("p", [0.15, 0.4, 0.75])
def test_enumeration_matches_brute_force(n, p):
    for seed in range(2):
        g = oracles.random_graph(n, p, seed=1000 * n + seed)
        got = enumerate_maximal_cliques(g)
        assert list(got.cliques) == oracles.brute_maximal_cliques(g)


def test_enumeration_named_graphs():
    pet = oracles.petersen()
    got = enumerate_maximal_cliques(pet)
    assert got.count == 15  # triangle-free, so the maximal cliques are edges
    assert got.max_size == 2
    assert got.isolated == ()

    k5 = enumerate_maximal_cliques(complete_graph(5))
    assert k5.cliques == ((0, 1, 2, 3, 4),)
    assert k5.count == 1 and k5.max_size == 5

    c4 = enumerate_maximal_cliques(cycle_graph(4))
    assert c4.count == 4 and c4.max_size == 2


def test_isolated_vertices_are_size_one_cliques():
    g = Graph.from_edges(5, [(0, 1)])
    got = enumerate_maximal_cliques(g)
    assert got.cliques == ((0, 1), (2,), (3,), (4,))
    assert got.isolated == (2, 3, 4)
    assert got.max_size == 2


def test_empty_graphs():
    assert enumerate_maximal_cliques(Graph.from_edges(0, [])).count == 0
    got = enumerate_maximal_cliques(Graph.from_edges(3, []))
    assert got.count == 3 and got.max_size == 1


def test_guard_raises_on_too_many_cliques():
    g = oracles.random_graph(12, 0.5, seed=3)
    full = enumerate_maximal_cliques(g)
    assert full.count > 3
    with pytest.raises(CliqueOverflowError) as exc:
        enumerate_maximal_cliques(g, max_count=3)
    assert exc.value.max_count == 3
    with pytest.raises(ParameterError):
        enumerate_maximal_cliques(g, max_count=0)


@given(st.integers(1, 9), st.integers(0, 10**6))
@settings(max_examples=50)
def test_enumeration_property(n, seed):
    g = oracles.random_graph(n, 0.5, seed)
    got = enumerate_maximal_cliques(g)
    assert list(got.cliques) == oracles.brute_maximal_cliques(g)
    assert got.count == len(got.cliques)
    assert got.max_size == max((len(c) for c in got.cliques), default=0)


# ------------------------------------------------------------- edge stats


@pytest.mark.parametrize("seed", range(5))
def test_triangle_stats_match_brute_force(seed):
    g = oracles.random_graph(9, 0.5, seed)
    stats = edge_triangle_stats(g)
    tris = oracles.oracle_triangles(g)
    assert stats.triangle_total == len(tris)
    per_edge = {e: 0 for e in g.edges()}
    for u, v, w in tris:
        per_edge[(u, v)] += 1
        per_edge[(u, w)] += 1
        per_edge[(v, w)] += 1
    assert stats.triangles_per_edge == per_edge
    assert stats.max_triangles == max(per_edge.values(), default=0)
    assert stats.edges_without_triangle == sum(1 for c in per_edge.values() if c == 0)
    assert stats.m == g.m


def test_triangle_stats_named():
    assert edge_triangle_stats(oracles.petersen()).triangle_total == 0
    k4 = edge_triangle_stats(complete_graph(4))
    assert k4.triangle_total == 4
    assert k4.max_triangles == 2  # each edge of K_4 lies in two triangles
    assert k4.edges_without_triangle == 0


def test_k1_per_edge_matches_brute_force():
    for seed in range(3):
        g = oracles.random_graph(8, 0.6, seed)
        for k in (2, 3, 4):
            stats = k1_cliques_per_edge(g, k)
            for (u, v), got in stats.k1_per_edge.items():
                common = [w for w in range(g.n)
                          if w not in (u, v) and g.has_edge(u, w) and g.has_edge(v, w)]
                want = sum(
                    1 for extra in combinations(common, k - 1)
                    if oracles.is_clique(g, extra)
                )
                assert got == want, (u, v, k)
            assert stats.max_k1 == max(stats.k1_per_edge.values(), default=0)
            assert stats.k == k


def test_k1_per_edge_k2_equals_triangles():
    g = oracles.random_graph(10, 0.4, seed=7)
    assert k1_cliques_per_edge(g, 2).k1_per_edge == edge_triangle_stats(g).triangles_per_edge


def test_k1_per_edge_complete():
    stats = k1_cliques_per_edge(complete_graph(5), 3)
    # each edge of K_5 extends to C(3, 2) = 3 different 4-cliques
    assert all(v == 3 for v in stats.k1_per_edge.values())
    with pytest.raises(ParameterError):
        k1_cliques_per_edge(complete_graph(5), 1)


# ------------------------------------------------------------- subset counts


def test_count_k_cliques_in_subset():
    g = complete_graph(6)
    assert count_k_cliques_in_subset(g, range(6), 3) == 20
    assert count_k_cliques_in_subset(g, [0, 1, 2, 3], 2) == 6
    assert count_k_cliques_in_subset(g, [0, 1], 3) == 0
    with pytest.raises(ParameterError):
        count_k_cliques_in_subset(g, [0, 1], 1)
    with pytest.raises(ParameterError):
        count_k_cliques_in_subset(g, [0, 9], 2)


@given(st.integers(2, 8), st.integers(2, 4), st.integers(0, 10**6))
@settings(max_examples=40)
def test_count_k_cliques_matches_brute(n, k, seed):
    g = oracles.random_graph(n, 0.6, seed)
    subset = [v for v in range(n) if (seed >> v) & 1] or [0]
    want = sum(1 for c in combinations(subset, k) if oracles.is_clique(g, c))
    assert count_k_cliques_in_subset(g, subset, k) == want


# ------------------------------------------------------------- density ratio


def test_dense_set_ratio():
    assert dense_set_ratio(complete_graph(4), range(4)) == Fraction(6, 2)
    c5 = cycle_graph(5)
    assert dense_set_ratio(c5, [0, 1, 2]) == Fraction(2, 1)
    assert dense_set_ratio(c5, range(5)) == Fraction(5, 3)
    with pytest.raises(ParameterError):
        dense_set_ratio(c5, [0, 1])
