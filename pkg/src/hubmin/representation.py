"""Canonical form for minimal two-pair networks, and its private-edge anatomy.

The transformation has three steps: merge away degree-2 relay vertices,
stretch vertices where the two systems cross without sharing an edge into a
public edge, and rewire the systems so every public edge is traversed the
same way by both.  The result ("representation") has all non-terminal
vertices of degree exactly 3 and is naturally oriented; its private edges
decompose into alternating paths, the combinatorial skeleton that the
interconnecting-path algorithm walks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .cuts import vertex_disjoint_paths
from .graph_core import (
    PHI,
    PSI,
    PUBLIC,
    UNUSED,
    Edge,
    InvariantError,
    Network,
    Path,
    PathSystem,
    classify_edges,
    hub_count,
    make_path_system,
    path_vertices,
)

# Alternating-path kinds, named by their terminal anchors.
S1S2 = "S1S2"
S1R1 = "S1R1"
R2S2 = "R2S2"
R2R1 = "R2R1"


@dataclass(frozen=True)
class Representation:
    """A degree-3, naturally oriented minimal two-pair network."""

    graph: Network
    systems: Tuple[PathSystem, PathSystem]
    provenance: Dict[str, Dict[int, int]]
    naturally_oriented: bool

    def natural_direction(self, edge_id: int) -> bool:
        """The direction every system path traverses this edge."""
        for system in self.systems:
            if edge_id in system.orientation:
                return system.orientation[edge_id]
        raise KeyError(f"edge {edge_id} is on neither system")


@dataclass(frozen=True)
class AlternatingPath:
    """A maximal private-edge path, anchored at its S1- or R2-side end.

    ``upper`` vertices are tails of both their private edges (and head of
    their public edge); ``lower`` vertices are heads of both (and tail of
    their public edge).  Vertex and edge order follow ``steps``, so "right"
    means a higher index.
    """

    steps: Tuple[int, ...]
    kind: str
    upper: Tuple[int, ...]
    lower: Tuple[int, ...]
    choke: Optional[int]


def _rewrite_path_through(g: Network, path: Path, relay: int, new_edge: Edge) -> Path:
    """Replace the two steps through ``relay`` with one step on ``new_edge``."""
    seq = path_vertices(g, path)
    if relay not in seq:
        return path
    at = seq.index(relay)  # seq[at-1] -e-> relay -f-> seq[at+1]
    entry, exit_ = at - 1, at
    forward = new_edge.u == seq[at - 1]
    steps = list(path.steps)
    steps[entry:exit_ + 1] = [(new_edge.id, forward)]
    return Path(steps=tuple(steps))


def remove_relays(
    g: Network, systems: Sequence[PathSystem]
) -> Tuple[Network, List[PathSystem], Dict[str, Dict[int, int]]]:
    """Merge every non-terminal degree-2 vertex's edge pair into one edge.

    Isolated non-terminal vertices (possible after edge deletions) are
    dropped as well.  Returns the new network, rewritten systems, and a
    provenance map (new edge id -> id of one merged original edge).
    """
    provenance = {"vertices": {}, "edges": {}}
    current = g
    cur_systems = list(systems)
    while True:
        relay = None
        for v in sorted(current.vertices):
            if not current.is_terminal(v) and current.degree(v) == 2:
                relay = v
                break
        if relay is None:
            break
        e_id, f_id = current.incident[relay]
        e, f = current.edge_by_id[e_id], current.edge_by_id[f_id]
        a, b = e.other(relay), f.other(relay)
        if a == b:
            raise InvariantError("degenerate-relay", f"merging at {relay} would close a loop")
        # Direction of the merged edge: a source endpoint forces a->b, a sink
        # endpoint b; otherwise the edge is interior and undirected.
        if a in current.source_set or b in current.sink_set:
            new_edge = Edge(id=max(current.edge_by_id) + 1, u=a, v=b, directed=True)
        elif b in current.source_set or a in current.sink_set:
            new_edge = Edge(id=max(current.edge_by_id) + 1, u=b, v=a, directed=True)
        else:
            new_edge = Edge(id=max(current.edge_by_id) + 1, u=a, v=b, directed=False)
        next_net = Network(
            vertices=tuple(v for v in current.vertices if v != relay),
            edges=tuple(x for x in current.edges if x.id not in (e_id, f_id))
            + (new_edge,),
            pairs=current.pairs,
        )
        new_systems = []
        for system in cur_systems:
            paths = [
                _rewrite_path_through(current, p, relay, new_edge) for p in system.paths
            ]
            new_systems.append(make_path_system(next_net, system.pair_index, paths))
        provenance["edges"][new_edge.id] = min(
            provenance["edges"].get(e_id, e_id), provenance["edges"].get(f_id, f_id)
        )
        provenance["edges"].pop(e_id, None)
        provenance["edges"].pop(f_id, None)
        current, cur_systems = next_net, new_systems

    isolated = [
        v
        for v in current.vertices
        if not current.is_terminal(v) and current.degree(v) == 0
    ]
    if isolated:
        doomed = set(isolated)
        current = Network(
            vertices=tuple(v for v in current.vertices if v not in doomed),
            edges=current.edges,
            pairs=current.pairs,
        )
        cur_systems = [
            make_path_system(current, s.pair_index, s.paths) for s in cur_systems
        ]
    return current, cur_systems, provenance


def stretch_crossings(
    g: Network, systems: Sequence[PathSystem]
) -> Tuple[Network, List[PathSystem], Dict[str, Dict[int, int]]]:
    """Split every crossing vertex into an in-half and an out-half.

    A crossing is a degree-4 non-terminal where both systems pass without
    sharing an edge.  Both incoming edges are re-attached to a new vertex v1,
    both outgoing edges to v2, and a new public edge v1->v2 carries both
    systems through.  Any other degree-4 (or higher) non-terminal means the
    input was not a relay-free minimal two-pair network.
    """
    provenance = {"vertices": {}, "edges": {}}
    current = g
    cur_systems = list(systems)
    while True:
        tags = classify_edges(current, cur_systems)
        crossing = None
        for v in sorted(current.vertices):
            if current.is_terminal(v):
                continue
            deg = current.degree(v)
            if deg <= 3:
                continue
            incident = current.incident[v]
            by_tag = {PHI: [], PSI: [], PUBLIC: [], UNUSED: []}
            for eid in incident:
                by_tag[tags[eid]].append(eid)
            if deg != 4 or len(by_tag[PHI]) != 2 or len(by_tag[PSI]) != 2:
                raise InvariantError(
                    "unexpected-degree-4",
                    f"vertex {v} has degree {deg} with tags "
                    f"{{phi: {len(by_tag[PHI])}, psi: {len(by_tag[PSI])}, "
                    f"public: {len(by_tag[PUBLIC])}, unused: {len(by_tag[UNUSED])}}}",
                )
            crossing = v
            break
        if crossing is None:
            break

        v = crossing
        v1 = max(current.vertices) + 1
        v2 = v1 + 1
        new_eid = max(current.edge_by_id) + 1
        # Sort the four incident edges by how their system traverses them.
        incoming, outgoing = [], []
        orientation_all = {}
        for s in cur_systems:
            orientation_all.update(s.orientation)
        for eid in current.incident[v]:
            e = current.edge_by_id[eid]
            tail, head = e.ends(orientation_all[eid])
            (incoming if head == v else outgoing).append(eid)
        if len(incoming) != 2 or len(outgoing) != 2:
            raise InvariantError(
                "unexpected-degree-4", f"vertex {v} is not a two-in two-out crossing"
            )

        def reattach(e: Edge, target: int) -> Edge:
            u = target if e.u == v else e.u
            w = target if e.v == v else e.v
            return Edge(id=e.id, u=u, v=w, directed=e.directed)

        new_edges = []
        for e in current.edges:
            if e.id in incoming:
                new_edges.append(reattach(e, v1))
            elif e.id in outgoing:
                new_edges.append(reattach(e, v2))
            else:
                new_edges.append(e)
        new_edges.append(Edge(id=new_eid, u=v1, v=v2, directed=False))
        next_net = Network(
            vertices=tuple(x for x in current.vertices if x != v) + (v1, v2),
            edges=tuple(new_edges),
            pairs=current.pairs,
        )

        new_systems = []
        for system in cur_systems:
            paths = []
            for p in system.paths:
                seq = path_vertices(current, p)
                if v not in seq:
                    paths.append(p)
                    continue
                at = seq.index(v)
                steps = list(p.steps)
                # The step entering v now enters v1; insert v1->v2; the step
                # leaving v leaves from v2.  Stored endpoints of the re-attached
                # edges changed, but step directions (u->v flags) survive
                # because reattach keeps endpoint order.
                steps[at - 1:at] = [steps[at - 1], (new_eid, True)]
                paths.append(Path(steps=tuple(steps)))
            new_systems.append(make_path_system(next_net, system.pair_index, paths))

        provenance["vertices"][v1] = provenance["vertices"].pop(v, v)
        provenance["vertices"][v2] = provenance["vertices"][v1]
        current, cur_systems = next_net, new_systems
    return current, cur_systems, provenance


def match_directions(
    g: Network, systems: Sequence[PathSystem]
) -> Tuple[Network, List[PathSystem], Dict[str, Dict[int, int]]]:
    """Rewire the second system so every public edge is traversed one way.

    For a public edge with opposite traversal directions, the second system's
    path enters and leaves through private edges; those two private edges are
    replaced by their "swapped" counterparts so the path runs through the
    public edge in the first system's direction.
    """
    provenance = {"vertices": {}, "edges": {}}
    current = g
    cur_systems = list(systems)
    while True:
        tags = classify_edges(current, cur_systems)
        phi, psi = cur_systems
        conflict = None
        for eid in sorted(tags):
            if tags[eid] == PUBLIC and phi.orientation[eid] != psi.orientation[eid]:
                conflict = eid
                break
        if conflict is None:
            break
        e = current.edge_by_id[conflict]
        u, v = e.ends(phi.orientation[conflict])  # phi runs u -> v
        # The psi path runs ... w3 -> v -> u -> w4 ...; find its two private
        # steps around the public edge.
        psi_path_idx, psi_path = next(
            (i, p)
            for i, p in enumerate(psi.paths)
            if conflict in (eid_ for eid_, _ in p.steps)
        )
        steps = list(psi_path.steps)
        at = next(i for i, (eid_, _) in enumerate(steps) if eid_ == conflict)
        if at == 0 or at == len(steps) - 1:
            raise InvariantError(
                "decomposition-violation", f"public edge {conflict} at a path end"
            )
        enter_eid = steps[at - 1][0]
        leave_eid = steps[at + 1][0]
        if tags[enter_eid] != PSI or tags[leave_eid] != PSI:
            raise InvariantError(
                "decomposition-violation",
                f"edges around inconsistent public edge {conflict} are not private",
            )
        enter_e = current.edge_by_id[enter_eid]
        leave_e = current.edge_by_id[leave_eid]
        w3 = enter_e.other(v)
        w4 = leave_e.other(u)
        id1 = max(current.edge_by_id) + 1
        id2 = id1 + 1
        new1 = Edge(id=id1, u=w3, v=u, directed=w3 in current.source_set)
        new2 = Edge(id=id2, u=v, v=w4, directed=w4 in current.sink_set)
        next_net = Network(
            vertices=current.vertices,
            edges=tuple(x for x in current.edges if x.id not in (enter_eid, leave_eid))
            + (new1, new2),
            pairs=current.pairs,
        )
        steps[at - 1:at + 2] = [
            (id1, True),
            (conflict, phi.orientation[conflict]),
            (id2, True),
        ]
        new_paths = list(psi.paths)
        new_paths[psi_path_idx] = Path(steps=tuple(steps))
        new_psi = make_path_system(next_net, psi.pair_index, new_paths)
        new_phi = make_path_system(next_net, phi.pair_index, phi.paths)
        provenance["edges"][id1] = provenance["edges"].pop(enter_eid, enter_eid)
        provenance["edges"][id2] = provenance["edges"].pop(leave_eid, leave_eid)
        current, cur_systems = next_net, [new_phi, new_psi]
    return current, cur_systems, provenance


def _compose_provenance(
    earlier: Dict[str, Dict[int, int]], later: Dict[str, Dict[int, int]]
) -> Dict[str, Dict[int, int]]:
    """Chain two new->old maps: resolve later's targets through earlier."""
    out = {"vertices": dict(earlier["vertices"]), "edges": dict(earlier["edges"])}
    for kind in ("vertices", "edges"):
        for new, old in later[kind].items():
            out[kind][new] = earlier[kind].get(old, old)
    return out


def to_representation(
    g: Network, systems: Optional[Sequence[PathSystem]] = None
) -> Representation:
    """Run the three steps on a minimal two-pair network.

    When systems are not supplied, maximal vertex-disjoint path systems are
    computed for both pairs.
    """
    if len(g.pairs) != 2:
        raise InvariantError("two-pairs-required", f"got {len(g.pairs)} pairs")
    if systems is None:
        systems = []
        for i, pair in enumerate(g.pairs):
            system = vertex_disjoint_paths(g, i, pair.demand)
            if system is None:
                raise InvariantError("not-in-class", f"pair {i} has no full system")
            systems.append(system)
    g1, systems1, prov1 = remove_relays(g, systems)
    g2, systems2, prov2 = stretch_crossings(g1, systems1)
    g3, systems3, prov3 = match_directions(g2, systems2)
    provenance = _compose_provenance(_compose_provenance(prov1, prov2), prov3)
    # Composition can leave entries for intermediate ids that a later step
    # replaced; only ids present in the final graph are meaningful.
    provenance["edges"] = {
        k: v for k, v in provenance["edges"].items() if k in g3.edge_by_id
    }
    vertex_set = set(g3.vertices)
    provenance["vertices"] = {
        k: v for k, v in provenance["vertices"].items() if k in vertex_set
    }

    rep = Representation(
        graph=g3,
        systems=(systems3[0], systems3[1]),
        provenance=provenance,
        naturally_oriented=True,
    )
    for v in g3.vertices:
        if not g3.is_terminal(v) and g3.degree(v) != 3:
            raise InvariantError(
                "decomposition-violation",
                f"non-terminal vertex {v} has degree {g3.degree(v)} after transformation",
            )
    return rep


def decompose_private(rep: Representation) -> List[AlternatingPath]:
    """Partition the private edges into their alternating paths.

    Walks start from the terminal edges at S1 and at R2 (so stored order is
    anchored there), hopping at each hub to its other private edge.  Kinds
    are named by the two terminals the walk connects; decks follow the
    head/tail rule; the initial choke is the rightmost lower vertex for an
    S1S2 path and the rightmost upper vertex for an R2R1 path.
    """
    g = rep.graph
    tags = classify_edges(g, rep.systems)
    if any(tag == UNUSED for tag in tags.values()):
        raise InvariantError("decomposition-violation", "unused edge in representation")
    s1, r1 = g.pairs[0].source, g.pairs[0].sink
    s2, r2 = g.pairs[1].source, g.pairs[1].sink

    private_at: Dict[int, List[int]] = {}
    for eid, tag in sorted(tags.items()):
        if tag == PUBLIC:
            continue
        e = g.edge_by_id[eid]
        for x in (e.u, e.v):
            if not g.is_terminal(x):
                private_at.setdefault(x, []).append(eid)
    for v, eids in private_at.items():
        if len(eids) != 2:
            raise InvariantError(
                "decomposition-violation",
                f"hub {v} has {len(eids)} private edges (want 2)",
            )

    seen: set = set()
    paths: List[AlternatingPath] = []

    def walk(first_eid: int, anchor: int) -> AlternatingPath:
        steps = [first_eid]
        prev_vertex = anchor
        edge = g.edge_by_id[first_eid]
        while True:
            nxt = edge.other(prev_vertex)
            if g.is_terminal(nxt):
                end = nxt
                break
            pair_edges = private_at[nxt]
            other = pair_edges[0] if pair_edges[1] == edge.id else pair_edges[1]
            if other == edge.id:
                raise InvariantError("decomposition-violation", f"stuck at hub {nxt}")
            steps.append(other)
            prev_vertex = nxt
            edge = g.edge_by_id[other]

        # Hubs sit between consecutive steps; classify each by head/tail.
        upper, lower = [], []
        walk_v = anchor
        hubs = []
        for eid in steps[:-1]:
            walk_v = g.edge_by_id[eid].other(walk_v)
            hubs.append(walk_v)
        for i, h in enumerate(hubs):
            left = g.edge_by_id[steps[i]]
            right = g.edge_by_id[steps[i + 1]]
            left_head = left.ends(rep.natural_direction(left.id))[1]
            right_head = right.ends(rep.natural_direction(right.id))[1]
            if left_head == h and right_head == h:
                lower.append(h)
            elif left_head != h and right_head != h:
                upper.append(h)
            else:
                raise InvariantError(
                    "decomposition-violation",
                    f"hub {h} is head of one private edge and tail of the other",
                )
            if tags[steps[i]] == tags[steps[i + 1]]:
                raise InvariantError(
                    "decomposition-violation",
                    f"private edges {steps[i]}, {steps[i+1]} at hub {h} share a system",
                )

        if anchor == s1:
            kind = S1S2 if end == s2 else (S1R1 if end == r1 else None)
        else:
            kind = R2S2 if end == s2 else (R2R1 if end == r1 else None)
        if kind is None:
            raise InvariantError(
                "decomposition-violation", f"walk from {anchor} ended at {end}"
            )
        if kind == S1S2:
            choke = lower[-1]
        elif kind == R2R1:
            choke = upper[-1]
        else:
            choke = None
        seen.update(steps)
        return AlternatingPath(
            steps=tuple(steps),
            kind=kind,
            upper=tuple(upper),
            lower=tuple(lower),
            choke=choke,
        )

    for anchor in (s1, r2):
        for eid in g.incident.get(anchor, ()):
            if tags[eid] != PUBLIC:
                paths.append(walk(eid, anchor))

    all_private = {eid for eid, tag in tags.items() if tag != PUBLIC}
    if seen != all_private:
        raise InvariantError(
            "decomposition-violation",
            f"private edges not covered: {sorted(all_private - seen)}",
        )
    c1, c2 = g.pairs[0].demand, g.pairs[1].demand
    if len(paths) != c1 + c2:
        raise InvariantError(
            "decomposition-violation",
            f"{len(paths)} alternating paths for demands ({c1},{c2})",
        )
    delta = sum(1 for p in paths if p.kind == S1S2)
    counts = {
        S1S2: delta,
        R2R1: delta,
        S1R1: c1 - delta,
        R2S2: c2 - delta,
    }
    for kind, want in counts.items():
        have = sum(1 for p in paths if p.kind == kind)
        if have != want:
            raise InvariantError(
                "decomposition-violation", f"{have} {kind} paths, expected {want}"
            )
    for p in paths:
        if p.kind == S1S2 and len(p.lower) != len(p.upper) + 1:
            raise InvariantError("decomposition-violation", "S1S2 deck parity")
        if p.kind == R2R1 and len(p.upper) != len(p.lower) + 1:
            raise InvariantError("decomposition-violation", "R2R1 deck parity")
        if p.kind in (S1R1, R2S2) and len(p.upper) != len(p.lower):
            raise InvariantError("decomposition-violation", f"{p.kind} deck parity")
    return paths
