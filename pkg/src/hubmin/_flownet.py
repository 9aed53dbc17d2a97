"""Integer max-flow and SCC plumbing shared by the cut and rerouting code.

Nodes are arbitrary hashable keys chosen by the caller; arcs are stored as a
flat list where arc ``i`` and ``i ^ 1`` form a forward/residual pair.  All
traversals follow insertion order, so results are deterministic.
"""

from __future__ import annotations

from collections import deque
from typing import Dict, Hashable, Iterable, List, Optional, Set, Tuple

INF = 10**9

Node = Hashable


class FlowNet:
    """Arc-list flow network with unit or large integer capacities."""

    def __init__(self):
        self.to: List[Node] = []
        self.frm: List[Node] = []
        self.cap: List[int] = []
        self.base_cap: List[int] = []
        self.adj: Dict[Node, List[int]] = {}

    def add_node(self, node: Node) -> None:
        self.adj.setdefault(node, [])

    def add_arc(self, tail: Node, head: Node, cap: int) -> int:
        """Add tail->head with the given capacity; returns the forward arc id."""
        self.add_node(tail)
        self.add_node(head)
        arc = len(self.to)
        self.to.extend((head, tail))
        self.frm.extend((tail, head))
        self.cap.extend((cap, 0))
        self.base_cap.extend((cap, 0))
        self.adj[tail].append(arc)
        self.adj[head].append(arc + 1)
        return arc

    def flow_on(self, arc: int) -> int:
        return self.base_cap[arc] - self.cap[arc]

    def push(self, arc: int, amount: int) -> None:
        """Force ``amount`` units through an arc (used to pre-load a known flow)."""
        if self.cap[arc] < amount:
            raise ValueError(f"arc {arc} cannot carry {amount}")
        self.cap[arc] -= amount
        self.cap[arc ^ 1] += amount

    def _bfs_parent(self, s: Node, t: Node) -> Optional[Dict[Node, int]]:
        """Shortest residual path search; returns child->arc map or None."""
        parent: Dict[Node, int] = {}
        seen = {s}
        queue = deque([s])
        while queue:
            node = queue.popleft()
            for arc in self.adj[node]:
                if self.cap[arc] <= 0:
                    continue
                nxt = self.to[arc]
                if nxt in seen:
                    continue
                seen.add(nxt)
                parent[nxt] = arc
                if nxt == t:
                    return parent
                queue.append(nxt)
        return None

    def max_flow(self, s: Node, t: Node, limit: int = INF) -> int:
        """Edmonds-Karp augmentation until no path remains or ``limit`` reached."""
        total = 0
        while total < limit:
            parent = self._bfs_parent(s, t)
            if parent is None:
                break
            bottleneck = limit - total
            node = t
            while node != s:
                arc = parent[node]
                bottleneck = min(bottleneck, self.cap[arc])
                node = self.frm[arc]
            node = t
            while node != s:
                arc = parent[node]
                self.push(arc, bottleneck)
                node = self.frm[arc]
            total += bottleneck
        return total

    def residual_reachable(self, s: Node) -> Set[Node]:
        """Nodes reachable from ``s`` through arcs with remaining capacity."""
        seen = {s}
        queue = deque([s])
        while queue:
            node = queue.popleft()
            for arc in self.adj[node]:
                if self.cap[arc] <= 0:
                    continue
                nxt = self.to[arc]
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
        return seen

    def residual_path(self, s: Node, t: Node) -> Optional[List[int]]:
        """Arc ids of one shortest residual s->t path, or None."""
        parent = self._bfs_parent(s, t)
        if parent is None:
            return None
        arcs: List[int] = []
        node = t
        while node != s:
            arc = parent[node]
            arcs.append(arc)
            node = self.frm[arc]
        arcs.reverse()
        return arcs


def strongly_connected_components(adj: Dict[Node, Iterable[Node]]) -> Dict[Node, int]:
    """Iterative Tarjan; returns node -> component id (ids are arbitrary)."""
    index: Dict[Node, int] = {}
    lowlink: Dict[Node, int] = {}
    on_stack: Set[Node] = set()
    stack: List[Node] = []
    comp: Dict[Node, int] = {}
    counter = 0
    comp_count = 0

    for root in adj:
        if root in index:
            continue
        work: List[Tuple[Node, Iterable]] = [(root, iter(adj.get(root, ())))]
        index[root] = lowlink[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            node, it = work[-1]
            advanced = False
            for nxt in it:
                if nxt not in index:
                    index[nxt] = lowlink[nxt] = counter
                    counter += 1
                    stack.append(nxt)
                    on_stack.add(nxt)
                    work.append((nxt, iter(adj.get(nxt, ()))))
                    advanced = True
                    break
                if nxt in on_stack:
                    lowlink[node] = min(lowlink[node], index[nxt])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                lowlink[parent] = min(lowlink[parent], lowlink[node])
            if lowlink[node] == index[node]:
                while True:
                    member = stack.pop()
                    on_stack.remove(member)
                    comp[member] = comp_count
                    if member == node:
                        break
                comp_count += 1
    return comp
