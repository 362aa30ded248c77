"""Queue layouts of graphs with a known tree-decomposition.

The ordering is built on the chordal completion (every bag made a clique).
Each component is BFS-layered; layer ``i`` splits into the traces of the
components of ``layers >= i`` (a layered tree-partition).  Layers are laid
out in order, the pieces of a layer sorted by the positions of their
neighbours one layer up, and each piece is ordered recursively the same way.
Queues are then assigned by nesting depth, which is optimal for the order.
"""

from __future__ import annotations

from collections import deque

from ..errors import InvalidDecomposition
from ..graph import Graph
from ..partition.types import TreeDecomposition
from ..partition.validate import validate_tree_decomposition
from .queues import QueueLayout, assign_queues_by_depth


def width_bound(width: int) -> int:
    """Target queue count for a width-``width`` decomposition."""
    return max(2 ** width - 1, 0)


def chordal_completion(graph: Graph, td: TreeDecomposition) -> list[set[int]]:
    adj = [set(a) for a in graph.adj]
    for bag in td.bags:
        bs = sorted(bag)
        for i, u in enumerate(bs):
            for v in bs[i + 1:]:
                adj[u].add(v)
                adj[v].add(u)
    return adj


class _DisjointSet:
    def __init__(self):
        self.parent: dict[int, int] = {}

    def add(self, x: int) -> None:
        self.parent.setdefault(x, x)

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def _components(vs: list[int], vset: set[int], adj: list[set[int]]) -> list[list[int]]:
    seen: set[int] = set()
    comps = []
    for s in vs:
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w in vset and w not in seen:
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        comps.append(comp)
    return comps


def layered_order(vertices: list[int], adj: list[set[int]]) -> list[int]:
    """Order ``vertices`` (inducing a subgraph of ``adj``) by nested BFS layerings."""
    vs = sorted(vertices)
    if len(vs) <= 1:
        return vs
    vset = set(vs)
    out: list[int] = []
    for comp in _components(vs, vset, adj):
        out.extend(_order_component(sorted(comp), adj))
    return out


def _order_component(vs: list[int], adj: list[set[int]]) -> list[int]:
    vset = set(vs)
    root = vs[0]
    layer_of = {root: 0}
    layers = [[root]]
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in sorted(adj[u]):
            if w in vset and w not in layer_of:
                layer_of[w] = layer_of[u] + 1
                if layer_of[w] == len(layers):
                    layers.append([])
                layers[layer_of[w]].append(w)
                queue.append(w)

    dsu = _DisjointSet()
    pieces_by_layer: list[list[list[int]]] = [[] for _ in layers]
    for i in range(len(layers) - 1, -1, -1):
        for v in layers[i]:
            dsu.add(v)
        for v in layers[i]:
            for w in adj[v]:
                if w in vset and layer_of[w] >= i:
                    dsu.union(v, w)
        groups: dict[int, list[int]] = {}
        for v in layers[i]:
            groups.setdefault(dsu.find(v), []).append(v)
        pieces_by_layer[i] = [sorted(g) for g in groups.values()]

    out: list[int] = []
    pos: dict[int, int] = {}
    for i, pieces in enumerate(pieces_by_layer):
        if i > 0:
            def shadow_key(piece, i=i):
                shadow = sorted({pos[w] for v in piece for w in adj[v]
                                 if w in vset and layer_of[w] == i - 1}, reverse=True)
                return (tuple(shadow), piece[0])
            pieces.sort(key=shadow_key)
        for piece in pieces:
            for v in layered_order(piece, adj):
                pos[v] = len(out)
                out.append(v)
    return out


def tree_decomposition_layout(graph: Graph, td: TreeDecomposition) -> QueueLayout:
    """Queue layout whose count depends only on the decomposition width."""
    report = validate_tree_decomposition(graph, td)
    if not report.is_valid:
        raise InvalidDecomposition(report.problem or "invalid tree-decomposition")
    adj = chordal_completion(graph, td)
    ordering = layered_order(list(range(graph.n)), adj)
    return assign_queues_by_depth(graph, ordering)
