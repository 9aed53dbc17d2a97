"""Brute-force reference answers for small networks.

Exhaustive enumeration of path systems and of edge-deletion subgraphs.
Deliberately independent of the structural machinery (no representations,
no alternating paths) so it can cross-check those modules; guarded against
inputs too large to enumerate.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

from .cuts import min_vertex_cut
from .extremal import signature_bound
from .graph_core import (
    InvariantError,
    Network,
    Path,
    PathSystem,
    delete_edges,
    hub_count,
    make_path_system,
    path_vertices,
)

MAX_INTERIOR_FOR_ENUMERATION = 20
MAX_FREE_EDGES = 24


@dataclass(frozen=True)
class OracleReport:
    """Result of the exhaustive minimum-hub search."""

    min_hub_subgraph: Network
    min_hubs: int
    num_minimal_subgraphs: int
    elapsed: float


def _all_simple_paths(g: Network, pair_index: int) -> List[Path]:
    """Every simple source->sink path, in (length, edge ids) order."""
    pair = g.pairs[pair_index]
    out: List[Path] = []
    steps: List[Tuple[int, bool]] = []
    visited: Set[int] = {pair.source}

    def extend(at: int) -> None:
        if at == pair.sink:
            out.append(Path(steps=tuple(steps)))
            return
        for eid in g.incident.get(at, ()):
            e = g.edge_by_id[eid]
            forward = e.u == at
            if e.directed and not forward:
                continue
            nxt = e.other(at)
            if nxt in visited:
                continue
            if g.is_terminal(nxt) and nxt != pair.sink:
                continue
            visited.add(nxt)
            steps.append((eid, forward))
            extend(nxt)
            steps.pop()
            visited.discard(nxt)

    extend(pair.source)
    out.sort(key=lambda p: (len(p.steps), p.edge_ids()))
    return out


def enumerate_path_systems(g: Network, pair_index: int) -> List[PathSystem]:
    """All systems of pairwise disjoint paths meeting the pair's demand."""
    interior = [v for v in g.vertices if not g.is_terminal(v)]
    if len(interior) > MAX_INTERIOR_FOR_ENUMERATION:
        raise InvariantError(
            "size-guard-exceeded",
            f"{len(interior)} interior vertices (enumeration limit "
            f"{MAX_INTERIOR_FOR_ENUMERATION})",
        )
    paths = _all_simple_paths(g, pair_index)
    demand = g.pairs[pair_index].demand
    interiors = [
        frozenset(path_vertices(g, p)[1:-1]) for p in paths
    ]
    edge_sets = [frozenset(p.edge_ids()) for p in paths]
    systems: List[PathSystem] = []
    for combo in combinations(range(len(paths)), demand):
        ok = True
        for a, b in combinations(combo, 2):
            if interiors[a] & interiors[b] or edge_sets[a] & edge_sets[b]:
                ok = False
                break
        if ok:
            systems.append(
                make_path_system(g, pair_index, [paths[i] for i in combo])
            )
    return systems


def _cut_profile(g: Network) -> Tuple[bool, bool]:
    """(feasible: all cuts >= demand, exact: all cuts == demand)."""
    feasible = exact = True
    for i, pair in enumerate(g.pairs):
        value = min_vertex_cut(g, i).value
        if value < pair.demand:
            feasible = False
            exact = False
            break
        if value != pair.demand:
            exact = False
    return feasible, exact


def min_hub_subgraph(g: Network, max_free: int = MAX_FREE_EDGES) -> OracleReport:
    """Exhaustive search for a spanning subgraph in class with fewest hubs.

    Edges whose single removal already destroys feasibility can never be
    deleted; the search branches only on the rest, pruning any deletion set
    that drops some pair's cut below its demand.
    """
    start = time.perf_counter()
    feasible, _ = _cut_profile(g)
    if not feasible:
        raise InvariantError(
            "no-in-class-subgraph", "a cut is already below its demand"
        )
    free: List[int] = []
    for e in sorted(g.edge_by_id):
        sub_feasible, _ = _cut_profile(delete_edges(g, [e]))
        if sub_feasible:
            free.append(e)
    if len(free) > max_free:
        raise InvariantError(
            "size-guard-exceeded",
            f"{len(free)} deletable edges (search limit {max_free})",
        )

    in_class_states: Set[FrozenSet[int]] = set()

    def search(deleted: FrozenSet[int], from_index: int) -> None:
        h = delete_edges(g, deleted) if deleted else g
        sub_feasible, exact = _cut_profile(h)
        if not sub_feasible:
            return
        if exact:
            in_class_states.add(deleted)
        for i in range(from_index, len(free)):
            search(deleted | {free[i]}, i + 1)

    search(frozenset(), 0)
    if not in_class_states:
        raise InvariantError(
            "no-in-class-subgraph", "no deletion set reaches exact cuts"
        )

    free_set = set(free)
    minimal = [
        s
        for s in in_class_states
        if all(s | {f} not in in_class_states for f in free_set - s)
    ]

    def keyed(state: FrozenSet[int]) -> Tuple[int, Tuple[int, ...]]:
        h = delete_edges(g, state)
        return (int(hub_count(h)), tuple(sorted(g.edge_by_id.keys() - state)))

    best = min(in_class_states, key=keyed)
    best_graph = delete_edges(g, best)
    return OracleReport(
        min_hub_subgraph=best_graph,
        min_hubs=int(hub_count(best_graph)),
        num_minimal_subgraphs=len(minimal),
        elapsed=time.perf_counter() - start,
    )


def check_bound(g: Network, max_free: int = MAX_FREE_EDGES) -> bool:
    """Does the exhaustive minimum respect the demand-signature bound?"""
    report = min_hub_subgraph(g, max_free=max_free)
    return report.min_hubs <= signature_bound([p.demand for p in g.pairs])
