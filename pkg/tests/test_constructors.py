"""Constructive colouring schemes: traces, validity, and palette guarantees."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cliquecolour.constructors import (
    DenseParams,
    TriFreeParams,
    dense_schedule,
    dense_two_phase_colouring,
    dominating_set_colouring,
    greedy_domset_colouring,
    greedy_mis,
    induced_subgraph,
    portfolio_colouring,
    trifree_decomposition_colouring,
)
from cliquecolour.errors import ParameterError
from cliquecolour.graph import GnpParams, Graph, complete_graph, cycle_graph, sample_gnp
from cliquecolour.solver import validate

import oracles

# ------------------------------------------------------------- greedy MIS


def test_greedy_mis_is_independent_and_maximal():
    for seed in range(5):
        g = oracles.random_graph(20, 0.3, seed)
        mis = greedy_mis(g)
        chosen = set(mis)
        for u in mis:
            for v in mis:
                if u != v:
                    assert not g.has_edge(u, v)
        for w in range(g.n):  # maximality = domination of the complement
            assert w in chosen or any(g.has_edge(w, u) for u in chosen)


def test_greedy_mis_scan_order():
    c5 = cycle_graph(5)
    assert greedy_mis(c5) == [0, 2]
    assert greedy_mis(c5, order=[4, 3, 2, 1, 0]) == [4, 2]


# ------------------------------------------------------------- domset rounds


def test_dominating_colouring_trace_c5():
    col = dominating_set_colouring(cycle_graph(5), [0, 2])
    assert col.assignment == (0, 1, 0, 2, 1)
    assert col.palette == 3
    assert col.method == "domset"
    assert validate(cycle_graph(5), col).valid


def test_dominating_colouring_complete():
    col = dominating_set_colouring(complete_graph(4), [0])
    assert col.assignment == (0, 1, 1, 1)
    assert col.palette == 2


def test_dominating_colouring_rejects_non_dominating():
    c5 = cycle_graph(5)
    with pytest.raises(ParameterError) as exc:
        dominating_set_colouring(c5, [0])
    assert "not dominated" in str(exc.value)
    with pytest.raises(ParameterError):
        dominating_set_colouring(c5, [0, 0, 2])
    with pytest.raises(ParameterError):
        dominating_set_colouring(c5, [7])


def test_dominating_palette_bound():
    for seed in range(5):
        g = oracles.random_graph(25, 0.25, seed)
        mis = greedy_mis(g)
        col = dominating_set_colouring(g, mis)
        assert col.palette <= len(mis) + 1
        assert validate(g, col).valid


def test_greedy_domset_colouring_seeded_order():
    g = oracles.random_graph(30, 0.3, seed=8)
    plain = greedy_domset_colouring(g)
    shuffled = greedy_domset_colouring(g, order_seed=4)
    assert validate(g, plain).valid and validate(g, shuffled).valid
    assert plain.method == shuffled.method == "domset"
    again = greedy_domset_colouring(g, order_seed=4)
    assert shuffled.assignment == again.assignment


def test_greedy_domset_handles_isolated_vertices():
    g = Graph.from_edges(4, [(0, 1)])
    col = greedy_domset_colouring(g)
    assert validate(g, col).valid


# ------------------------------------------------------------- trifree


def test_trifree_params_validation():
    with pytest.raises(ParameterError):
        TriFreeParams(eta=0.8)
    with pytest.raises(ParameterError):
        TriFreeParams(beta=0.3)
    with pytest.raises(ParameterError):
        TriFreeParams(p=0.0)
    with pytest.raises(ParameterError):
        TriFreeParams(p=1.5)
    assert TriFreeParams().eta == 0.5
    assert TriFreeParams().beta == 0.2


def test_trifree_classes_are_triangle_free_with_covered_edges():
    for seed in range(4):
        g = oracles.random_graph(24, 0.4, seed)
        col = trifree_decomposition_colouring(g)
        assert col.method == "trifree"
        assert validate(g, col).valid
        classes: dict[int, list[int]] = {}
        for v, c in enumerate(col.assignment):
            classes.setdefault(c, []).append(v)
        for members in classes.values():
            inside = set(members)
            for u in members:
                for v in members:
                    if u < v and g.has_edge(u, v):
                        # no triangle within the class
                        assert not any(
                            w in inside and g.has_edge(u, w) and g.has_edge(v, w)
                            for w in range(g.n)
                        )
                        # the edge is not a maximal clique of g
                        assert any(
                            g.has_edge(u, w) and g.has_edge(v, w) for w in range(g.n)
                        )


def test_trifree_staged_schedule_estimates_p_when_absent():
    g = oracles.random_graph(12, 0.5, seed=0)
    col = trifree_decomposition_colouring(g, TriFreeParams(staged_schedule=True))
    assert validate(g, col).valid


def test_trifree_staged_schedule_validates():
    for seed in range(3):
        g = sample_gnp(GnpParams(n=200, p=0.08, seed=seed))
        col = trifree_decomposition_colouring(
            g, TriFreeParams(p=0.08, staged_schedule=True)
        )
        assert col.method == "trifree"
        assert validate(g, col).valid


def test_trifree_triangle_free_graph_gives_proper_colouring():
    # on a triangle-free graph every edge is maximal, so classes must be
    # independent sets
    pet = oracles.petersen()
    col = trifree_decomposition_colouring(pet)
    for u, v in pet.edges():
        assert col.assignment[u] != col.assignment[v]
    assert validate(pet, col).valid


# ------------------------------------------------------------- dense


def test_dense_schedule_formula():
    params = dense_schedule(10_000, 0.5)
    gamma = 2.0 * math.log(math.log(10_000)) / math.log(10_000)
    want = math.ceil((0.5 + gamma) * math.log(10_000) / -math.log1p(-0.5))
    assert params.k_stop == want == 14
    assert params.p == 0.5
    with pytest.raises(ParameterError):
        dense_schedule(10, 0.0)
    with pytest.raises(ParameterError):
        dense_schedule(10, 1.0)
    with pytest.raises(ParameterError):
        DenseParams(p=0.5, gamma=0.1, k_stop=0)


def test_dense_on_complete_graph():
    col = dense_two_phase_colouring(complete_graph(8))
    assert col.palette == 2
    assert validate(complete_graph(8), col).valid


def test_dense_degenerate_inputs():
    assert dense_two_phase_colouring(Graph.from_edges(0, [])).palette == 0
    edgeless = dense_two_phase_colouring(Graph.from_edges(5, []))
    assert edgeless.palette == 1
    assert edgeless.assignment == (0,) * 5
    tiny = dense_two_phase_colouring(Graph.from_edges(2, [(0, 1)]))
    assert tiny.palette == 2
    assert tiny.method == "dense"


def test_dense_palette_bound_and_validity():
    for seed in range(4):
        g = sample_gnp(GnpParams(n=400, p=0.5, seed=seed))
        params = dense_schedule(g.n, 0.5)
        col = dense_two_phase_colouring(g, params)
        assert validate(g, col).valid
        if col.method == "dense":
            assert col.palette <= params.k_stop + 2


def test_dense_estimates_p_when_not_given():
    g = sample_gnp(GnpParams(n=300, p=0.4, seed=1))
    col = dense_two_phase_colouring(g)
    assert validate(g, col).valid
    assert col.method in ("dense", "dense+fallback")


# ------------------------------------------------------------- portfolio


def test_portfolio_picks_smallest_valid_palette():
    g = sample_gnp(GnpParams(n=150, p=0.3, seed=3))
    col = portfolio_colouring(g, p_hint=0.3)
    assert col.method.startswith("portfolio:")
    assert validate(g, col).valid
    candidates = [
        greedy_domset_colouring(g).palette,
        trifree_decomposition_colouring(g, TriFreeParams(p=0.3)).palette,
        dense_two_phase_colouring(g, dense_schedule(g.n, 0.3)).palette,
    ]
    assert col.palette == min(candidates)


def test_portfolio_edge_hints():
    g = oracles.random_graph(10, 0.5, seed=5)
    for hint in (None, 0.0, 1.0, 2.0):
        col = portfolio_colouring(g, p_hint=hint)
        assert validate(g, col).valid


def test_portfolio_on_report_examples():
    assert portfolio_colouring(cycle_graph(5)).palette == 3
    assert portfolio_colouring(complete_graph(6)).palette == 2
    assert portfolio_colouring(Graph.from_edges(4, [])).palette == 1


# ------------------------------------------------------------- helpers


def test_induced_subgraph():
    g = cycle_graph(6)
    sub, back = induced_subgraph(g, [1, 2, 4])
    assert sub.n == 3
    assert sub.m == 1  # only the edge 1-2 survives
    assert tuple(back) == (1, 2, 4)


@given(st.integers(1, 14), st.integers(0, 10**6), st.sampled_from([0.1, 0.4, 0.8]))
@settings(max_examples=60, deadline=None)
def test_all_constructors_validate(n, seed, p):
    g = oracles.random_graph(n, p, seed)
    schemes = [
        greedy_domset_colouring(g),
        trifree_decomposition_colouring(g, TriFreeParams(p=p)),
        dense_two_phase_colouring(g),
        portfolio_colouring(g, p_hint=p),
    ]
    for col in schemes:
        assert len(col.assignment) == n
        assert validate(g, col).valid
        assert oracles.is_valid_clique_colouring(g, col.assignment)
