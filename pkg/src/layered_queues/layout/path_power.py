"""Queue layouts of graphs whose edges are short paths through low-degree vertices."""

from __future__ import annotations

from collections import deque
from typing import Sequence

from ..errors import BadWitness
from ..graph import Edge, Graph, norm_edge
from .queues import QueueLayout


def low_degree_edge_colouring(graph: Graph, delta: int) -> dict[Edge, int]:
    """Greedy colouring, proper at every vertex of degree at most ``delta``.

    Uses at most ``2 * delta - 1`` colours.
    """
    colour: dict[Edge, int] = {}
    used: list[set[int]] = [set() for _ in range(graph.n)]
    for u, v in graph.edges:
        low = [x for x in (u, v) if graph.degree(x) <= delta]
        blocked = set().union(*(used[x] for x in low)) if low else set()
        c = 0
        while c in blocked:
            c += 1
        colour[(u, v)] = c
        for x in low:
            used[x].add(c)
    return colour


def path_power_bound(k: int, colours: int, c: int) -> int:
    """Sum over path lengths L = 1..c of (2 k colours)^L, below 2 (2 k colours)^(c+1)."""
    return sum((2 * k * colours) ** length for length in range(1, c + 1))


def _check_witness(base: Graph, edge: Edge, path: Sequence[int], c: int, delta: int) -> None:
    u, v = edge
    if len(path) < 2 or {path[0], path[-1]} != {u, v} or u == v:
        raise BadWitness(f"path {list(path)} does not join {u} and {v}")
    if len(path) - 1 > c:
        raise BadWitness(f"path for {edge} has {len(path) - 1} edges, more than {c}")
    for a, b in zip(path, path[1:]):
        if not base.has_edge(a, b):
            raise BadWitness(f"path for {edge} uses non-edge ({a}, {b})")
    for x in path[1:-1]:
        if base.degree(x) > delta:
            raise BadWitness(f"internal vertex {x} of the path for {edge} has degree {base.degree(x)} > {delta}")


def path_power_layout(
    base_graph: Graph,
    base_layout: QueueLayout,
    c: int,
    delta: int,
    target_edges: Sequence[tuple[Edge, Sequence[int]]],
) -> tuple[Graph, QueueLayout]:
    """Lay out the target graph on the base ordering.

    An edge ``vw`` with ``v`` first and witness ``v = x_0, ..., x_L = w`` goes to
    the queue keyed by ``L`` and the per-step tuples of direction, base queue
    and edge colour.  Two target edges with equal keys are walked in lockstep:
    the low-degree colouring keeps the walks apart, and equal queue and
    direction keep them from nesting, so their ends cannot nest either.
    """
    if c < 1 or delta < 2:
        raise ValueError("need c >= 1 and delta >= 2")
    pos = base_layout.position
    colour = low_degree_edge_colouring(base_graph, delta)
    keys: dict[Edge, tuple] = {}
    for edge, path in target_edges:
        edge = norm_edge(*edge)
        _check_witness(base_graph, edge, path, c, delta)
        path = list(path)
        if pos[path[0]] > pos[path[-1]]:
            path.reverse()
        steps = list(zip(path, path[1:]))
        f = tuple(1 if pos[a] < pos[b] else -1 for a, b in steps)
        q = tuple(base_layout.queue_of[norm_edge(a, b)] for a, b in steps)
        h = tuple(colour[norm_edge(a, b)] for a, b in steps)
        key = (len(steps), f, q, h)
        if edge in keys and keys[edge] != key:
            keys[edge] = min(keys[edge], key)
        else:
            keys[edge] = key
    target = Graph.from_edges(base_graph.n, keys)
    index = {k: i for i, k in enumerate(sorted(set(keys.values())))}
    layout = QueueLayout(base_layout.ordering, {e: index[k] for e, k in keys.items()})
    return target, layout


def power_targets(graph: Graph, c: int, delta: int) -> list[tuple[Edge, list[int]]]:
    """All pairs joined by a path of at most ``c`` edges through vertices of degree <= ``delta``.

    Each pair comes with a shortest such path, found by a BFS that only
    continues through low-degree vertices.
    """
    out = []
    for s in range(graph.n):
        prev = {s: None}
        dist = {s: 0}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if dist[u] == c or (u != s and graph.degree(u) > delta):
                continue
            for w in sorted(graph.adj[u]):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    prev[w] = u
                    queue.append(w)
        for t in sorted(dist):
            if t <= s:
                continue
            path = [t]
            while path[-1] != s:
                path.append(prev[path[-1]])
            out.append(((s, t), path[::-1]))
    return out


def subdivide(graph: Graph) -> tuple[Graph, dict[Edge, int]]:
    """1-subdivision: edge ``e`` gets a new middle vertex ``mid[e]``."""
    mid = {e: graph.n + i for i, e in enumerate(graph.edges)}
    edges = [(u, mid[(u, v)]) for u, v in graph.edges] + [(mid[(u, v)], v) for u, v in graph.edges]
    return Graph.from_edges(graph.n + graph.m, edges), mid
