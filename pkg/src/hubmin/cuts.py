"""Minimum vertex cuts, vertex-disjoint path systems, and class membership.

The cut between a pair is taken over interior vertices: every vertex other
than the pair's own terminals is split into an in/out half joined by a
unit-capacity arc, edges get effectively unbounded capacity, and the max flow
equals the min cut.  A direct source->sink edge of the queried pair has no
interior vertex to cut, so it counts 1 toward the cut value (as if it were
subdivided); ``CutResult.separator`` holds interior vertices only, hence
``value == len(separator) + number of direct pair edges``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from ._flownet import INF, FlowNet
from .graph_core import Network, Path, PathSystem, make_path_system


@dataclass(frozen=True)
class CutResult:
    """Cut value and one minimum separator of interior vertices."""

    value: int
    separator: frozenset


@dataclass
class _PairNet:
    """Vertex-split flow network for one pair, with arc bookkeeping."""

    net: FlowNet
    edge_arcs: Dict[int, Tuple[int, bool]] = field(default_factory=dict)
    arc_of_step: Dict[Tuple[int, bool], int] = field(default_factory=dict)
    vertex_arc: Dict[int, int] = field(default_factory=dict)


def _build_pair_net(g: Network, pair_index: int, edge_cap: int = INF) -> _PairNet:
    """Split every non-terminal-of-the-pair vertex into unit in/out halves.

    ``edge_cap`` is the capacity of edge arcs: effectively unbounded for cut
    computation, 1 for rerouting analysis.  Direct source->sink edges of the
    pair always get capacity 1 (see module docstring).
    """
    pair = g.pairs[pair_index]
    s, t = pair.source, pair.sink

    def node_in(v: int):
        return v if v in (s, t) else ("in", v)

    def node_out(v: int):
        return v if v in (s, t) else ("out", v)

    built = _PairNet(net=FlowNet())
    net = built.net
    net.add_node(s)
    net.add_node(t)
    for v in sorted(g.vertices):
        if v not in (s, t):
            built.vertex_arc[v] = net.add_arc(("in", v), ("out", v), 1)

    def add_edge_arc(e, forward: bool, cap: int):
        tail, head = e.ends(forward)
        arc = net.add_arc(node_out(tail), node_in(head), cap)
        built.edge_arcs[arc] = (e.id, forward)
        built.arc_of_step[(e.id, forward)] = arc

    for e in sorted(g.edges, key=lambda e: e.id):
        if e.directed:
            cap = 1 if (e.u == s and e.v == t) else edge_cap
            add_edge_arc(e, True, cap)
        else:
            add_edge_arc(e, True, edge_cap)
            add_edge_arc(e, False, edge_cap)
    return built


def min_vertex_cut(g: Network, pair_index: int) -> CutResult:
    """Exact minimum interior-vertex cut between the pair's terminals."""
    pair = g.pairs[pair_index]
    net = _build_pair_net(g, pair_index).net
    value = net.max_flow(pair.source, pair.sink)
    reachable = net.residual_reachable(pair.source)
    separator = frozenset(
        v
        for v in g.vertices
        if v not in (pair.source, pair.sink)
        and ("in", v) in reachable
        and ("out", v) not in reachable
    )
    return CutResult(value=value, separator=separator)


def vertex_disjoint_paths(g: Network, pair_index: int, k: int) -> Optional[PathSystem]:
    """k pairwise vertex-disjoint source->sink paths, or None if fewer exist.

    The integral flow is decomposed deterministically, lowest arc id first.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    pair = g.pairs[pair_index]
    built = _build_pair_net(g, pair_index)
    net, edge_arcs = built.net, built.edge_arcs
    if net.max_flow(pair.source, pair.sink, limit=k) < k:
        return None

    # Net out opposing flow on the two directions of each undirected edge so
    # the walk below never doubles back across one edge.
    remaining: Dict[int, int] = {}
    for arc in range(0, len(net.to), 2):
        remaining[arc] = net.flow_on(arc)
    by_edge: Dict[int, List[int]] = {}
    for arc, (eid, _) in edge_arcs.items():
        by_edge.setdefault(eid, []).append(arc)
    for arcs in by_edge.values():
        if len(arcs) == 2:
            cancel = min(remaining[arcs[0]], remaining[arcs[1]])
            remaining[arcs[0]] -= cancel
            remaining[arcs[1]] -= cancel

    paths: List[Path] = []
    for _ in range(k):
        steps: List[Tuple[int, bool]] = []
        node = pair.source
        while node != pair.sink:
            for arc in net.adj[node]:
                if arc % 2 == 0 and remaining.get(arc, 0) > 0:
                    remaining[arc] -= 1
                    if arc in edge_arcs:
                        steps.append(edge_arcs[arc])
                    node = net.to[arc]
                    break
            else:
                raise AssertionError("flow decomposition ran out of arcs")
        paths.append(Path(steps=tuple(steps)))
    return make_path_system(g, pair_index, paths)


def in_class(g: Network) -> bool:
    """True iff every pair's minimum vertex cut equals its demand exactly."""
    return all(
        min_vertex_cut(g, i).value == pair.demand for i, pair in enumerate(g.pairs)
    )
