"""Minimum vertex cuts, disjoint path extraction, and class membership."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hubmin import (
    Edge,
    Network,
    Pair,
    delete_edges,
    grid_graph,
    in_class,
    min_vertex_cut,
    path_vertices,
    random_network,
    vertex_disjoint_paths,
)

from conftest import two_pair_corpus


def _net(vertices, edges, pairs):
    return Network(vertices=tuple(vertices), edges=tuple(edges), pairs=tuple(pairs))


def test_grid_cuts_equal_demands():
    g = grid_graph(2, 3)
    assert min_vertex_cut(g, 0).value == 2
    assert min_vertex_cut(g, 1).value == 3
    assert in_class(g)


def test_separator_is_interior_and_matches_value():
    g = grid_graph(2, 2)
    cut = min_vertex_cut(g, 0)
    assert cut.value == 2 == len(cut.separator)
    assert all(not g.is_terminal(v) for v in cut.separator)


def test_direct_pair_edge_counts_one():
    # S -> R directly: nothing interior to remove, but the edge itself
    # contributes one unit, as if subdivided.
    g = _net([0, 1], [Edge(0, 0, 1, True)], [Pair(0, 1, 1)])
    cut = min_vertex_cut(g, 0)
    assert cut.value == 1 and cut.separator == frozenset()
    assert in_class(g)


def test_direct_edge_plus_interior_route():
    g = _net(
        [0, 1, 2],
        [Edge(0, 0, 1, True), Edge(1, 0, 2, True), Edge(2, 2, 1, True)],
        [Pair(0, 1, 2)],
    )
    cut = min_vertex_cut(g, 0)
    assert cut.value == 2
    assert cut.separator == frozenset({2})


def test_parallel_direct_edges_each_count():
    g = _net(
        [0, 1],
        [Edge(0, 0, 1, True), Edge(1, 0, 1, True)],
        [Pair(0, 1, 2)],
    )
    assert min_vertex_cut(g, 0).value == 2


def test_foreign_terminals_block_flow():
    # The only route for pair 0 passes through pair 1's source, which is
    # split like any other non-own-terminal vertex; capacity stays 1.
    g = _net(
        [0, 1, 2, 3, 4],
        [
            Edge(0, 0, 4, True),
            Edge(1, 2, 4, True),
            Edge(2, 4, 1, True),
            Edge(3, 4, 3, True),
        ],
        [Pair(0, 1, 1), Pair(2, 3, 1)],
    )
    assert min_vertex_cut(g, 0).value == 1
    assert min_vertex_cut(g, 0).separator == frozenset({4})


def test_vertex_disjoint_paths_meets_demand():
    g = grid_graph(3, 2)
    system = vertex_disjoint_paths(g, 0, 3)
    assert system is not None and len(system.paths) == 3
    for p in system.paths:
        seq = path_vertices(g, p)
        assert seq[0] == g.pairs[0].source and seq[-1] == g.pairs[0].sink


def test_vertex_disjoint_paths_beyond_cut_returns_none():
    g = grid_graph(2, 2)
    assert vertex_disjoint_paths(g, 0, 3) is None


def test_vertex_disjoint_paths_rejects_bad_k():
    with pytest.raises(ValueError):
        vertex_disjoint_paths(grid_graph(2, 2), 0, 0)


def test_vertex_disjoint_paths_deterministic():
    g = grid_graph(3, 3)
    a = vertex_disjoint_paths(g, 1, 3)
    b = vertex_disjoint_paths(g, 1, 3)
    assert a.paths == b.paths


def test_menger_equality_on_corpus():
    # k disjoint paths exist exactly up to the cut value.
    for g, _ in two_pair_corpus(seed=101, count=20, extra=2):
        for i, pair in enumerate(g.pairs):
            value = min_vertex_cut(g, i).value
            assert value == pair.demand
            assert vertex_disjoint_paths(g, i, value) is not None
            assert vertex_disjoint_paths(g, i, value + 1) is None


def test_separator_hits_every_system_path():
    # Each system path either is a direct terminal edge or meets the
    # separator; the cut value decomposes accordingly.
    for g, systems in two_pair_corpus(seed=102, count=20):
        for i, system in enumerate(systems):
            pair = g.pairs[i]
            cut = min_vertex_cut(g, i)
            direct_edges = sum(
                1
                for e in g.edges
                if {e.u, e.v} == {pair.source, pair.sink}
            )
            for p in system.paths:
                seq = path_vertices(g, p)
                if len(seq) > 2:
                    assert set(seq[1:-1]) & cut.separator
            assert cut.value == len(cut.separator) + direct_edges


def test_in_class_fails_after_deleting_mandatory_edge():
    g = grid_graph(2, 2)
    # Grid is minimal: removing any edge must lower some cut.
    for e in g.edges:
        assert not in_class(delete_edges(g, [e.id]))


@settings(max_examples=50, deadline=None)
@given(
    seed=st.integers(min_value=0, max_value=10_000),
    demand=st.integers(min_value=1, max_value=4),
)
def test_random_single_pair_networks_are_in_class(seed, demand):
    g, (system,) = random_network(seed, (demand,), extra=2)
    assert min_vertex_cut(g, 0).value == demand
    assert len(system.paths) == demand


@settings(max_examples=50, deadline=None)
@given(seed=st.integers(min_value=0, max_value=10_000))
def test_deletion_never_raises_a_cut(seed):
    g, _ = random_network(seed, (2, 2), extra=2)
    base = [min_vertex_cut(g, i).value for i in range(2)]
    doomed = sorted(g.edge_by_id)[: len(g.edges) // 3]
    h = delete_edges(g, doomed)
    for i in range(2):
        assert min_vertex_cut(h, i).value <= base[i]
