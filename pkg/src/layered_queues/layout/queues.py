"""Queue layouts: rainbows, depth assignment, validation and small constructions."""

from __future__ import annotations

import json
from bisect import bisect_left
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

import numpy as np

from ..errors import NotAOneQueueHost, ParseError
from ..generators import grid_graph, grid_vertex
from ..graph import Edge, Graph, norm_edge

BRUTE_FORCE_LIMIT = 10_000


@dataclass(frozen=True)
class QueueLayout:
    ordering: tuple[int, ...]
    queue_of: Mapping[Edge, int] = field(hash=False)

    @cached_property
    def position(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.ordering)}

    @property
    def queue_count(self) -> int:
        return len(set(self.queue_of.values()))

    def queues(self) -> list[list[Edge]]:
        out: list[list[Edge]] = [[] for _ in range(max(self.queue_of.values(), default=-1) + 1)]
        for e in sorted(self.queue_of):
            out[self.queue_of[e]].append(e)
        return out

    def canonical(self) -> "QueueLayout":
        """Renumber queue indices to ``0..count-1`` keeping their relative order."""
        used = sorted(set(self.queue_of.values()))
        new = {q: i for i, q in enumerate(used)}
        return QueueLayout(self.ordering, {e: new[q] for e, q in sorted(self.queue_of.items())})


def _intervals(edges: Iterable[Edge], pos: Mapping[int, int]) -> list[tuple[int, int, Edge]]:
    out = []
    for u, v in edges:
        a, b = pos[u], pos[v]
        if a > b:
            a, b = b, a
        out.append((a, b, (u, v)))
    return out


def nesting_depths(edges: Sequence[Edge], pos: Mapping[int, int]) -> dict[Edge, int]:
    """For each edge, the longest chain of edges strictly nesting over it.

    Intervals sorted by left end (ties: right end ascending) and a strictly
    increasing subsequence over negated right ends gives the chain lengths.
    """
    ivs = sorted(_intervals(edges, pos), key=lambda t: (t[0], t[1]))
    tails: list[int] = []
    depth = {}
    for _, b, e in ivs:
        x = -b
        i = bisect_left(tails, x)
        if i == len(tails):
            tails.append(x)
        else:
            tails[i] = x
        depth[norm_edge(*e)] = i
    return depth


def max_rainbow(graph: Graph, ordering: Sequence[int]) -> int:
    """Largest set of pairwise nested edges under ``ordering``."""
    pos = {v: i for i, v in enumerate(ordering)}
    depths = nesting_depths(graph.edges, pos)
    return max(depths.values(), default=-1) + 1


def assign_queues_by_depth(graph: Graph, ordering: Sequence[int]) -> QueueLayout:
    pos = {v: i for i, v in enumerate(ordering)}
    return QueueLayout(tuple(ordering), nesting_depths(graph.edges, pos))


def _nested_pair_sweep(ivs: list[tuple[int, int, Edge]]):
    ivs = sorted(ivs, key=lambda t: (t[0], t[1]))
    best = None  # interval with the largest right end among strictly smaller lefts
    i = 0
    while i < len(ivs):
        j = i
        while j < len(ivs) and ivs[j][0] == ivs[i][0]:
            j += 1
        if best is not None:
            for a, b, e in ivs[i:j]:
                if best[1] > b:
                    return best[2], e
        for t in ivs[i:j]:
            if best is None or t[1] > best[1]:
                best = t
        i = j
    return None


def _nested_pair_brute(ivs: list[tuple[int, int, Edge]]):
    if len(ivs) < 2:
        return None
    left = np.array([t[0] for t in ivs])
    right = np.array([t[1] for t in ivs])
    for start in range(0, len(ivs), 1024):
        lo, ro = left[start:start + 1024, None], right[start:start + 1024, None]
        hits = np.argwhere((lo < left[None, :]) & (right[None, :] < ro))
        if len(hits):
            a, b = hits[0]
            return ivs[start + a][2], ivs[b][2]
    return None


@dataclass
class QueueLayoutReport:
    is_valid: bool
    queue_count: int
    first_violation: dict | None = None


def validate_queue_layout(graph: Graph, layout: QueueLayout) -> QueueLayoutReport:
    count = layout.queue_count
    if sorted(layout.ordering) != list(range(graph.n)):
        return QueueLayoutReport(False, count, {"reason": "ordering is not a permutation of V(G)"})
    assigned = set(layout.queue_of)
    missing = [e for e in graph.edges if e not in assigned]
    if missing:
        return QueueLayoutReport(False, count, {"reason": "edge without queue", "edge": list(missing[0])})
    extra = sorted(assigned - set(graph.edges))
    if extra:
        return QueueLayoutReport(False, count, {"reason": "queue holds a non-edge", "edge": list(extra[0])})
    if set(layout.queue_of.values()) != set(range(count)):
        return QueueLayoutReport(False, count, {"reason": "queue indices are not 0..count-1"})
    finder = _nested_pair_brute if graph.m <= BRUTE_FORCE_LIMIT else _nested_pair_sweep
    for q, edges in enumerate(layout.queues()):
        pair = finder(_intervals(edges, layout.position))
        if pair is not None:
            outer, inner = pair
            return QueueLayoutReport(False, count, {
                "reason": "nested edges share a queue",
                "queue": q, "outer": list(outer), "inner": list(inner),
            })
    return QueueLayoutReport(True, count)


def complete_graph_layout(ell: int) -> QueueLayout:
    """K_ell on its natural order with floor(ell/2) queues.

    Edge lengths 2q+1 and 2q+2 share queue q; equal or adjacent lengths
    cannot nest over integer positions.
    """
    if ell < 1:
        raise ValueError("ell must be positive")
    queue_of = {(i, j): (j - i + 1) // 2 - 1 for i in range(ell) for j in range(i + 1, ell)}
    return QueueLayout(tuple(range(ell)), queue_of)


def blowup_layout(
    host_graph: Graph,
    host_layout: QueueLayout,
    blocks: Mapping[int, Sequence[int]],
    blown_graph: Graph,
) -> QueueLayout:
    """Replace each host vertex by its block in the host order; assign queues by depth."""
    if host_layout.queue_count > 1:
        raise NotAOneQueueHost(f"host layout uses {host_layout.queue_count} queues")
    host_of = {}
    for h, block in blocks.items():
        for v in block:
            host_of[v] = h
    for u, v in blown_graph.edges:
        if not host_graph.has_edge(host_of[u], host_of[v]):
            raise ValueError(f"edge ({u}, {v}) is not in the blowup of the host")
    ordering = [v for h in host_layout.ordering for v in blocks.get(h, ())]
    return assign_queues_by_depth(blown_graph, ordering)


def grid_layout(n: int) -> tuple[Graph, QueueLayout]:
    """One-queue layout of the n x n grid: sort by x+y, then by x."""
    g = grid_graph(n)
    cells = sorted(((x, y) for x in range(n) for y in range(n)), key=lambda c: (c[0] + c[1], c[0]))
    ordering = tuple(grid_vertex(n, x, y) for x, y in cells)
    return g, QueueLayout(ordering, {e: 0 for e in g.edges})


# -- serialization ----------------------------------------------------------


def layout_to_dict(layout: QueueLayout) -> dict:
    return {
        "ordering": list(layout.ordering),
        "queues": [[list(e) for e in q] for q in layout.queues()],
    }


def layout_from_dict(data: dict) -> QueueLayout:
    try:
        ordering = tuple(int(v) for v in data["ordering"])
        queue_of = {}
        for q, edges in enumerate(data["queues"]):
            for u, v in edges:
                queue_of[norm_edge(int(u), int(v))] = q
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed queue layout: {exc}") from None
    return QueueLayout(ordering, queue_of)


def dumps_layout(layout: QueueLayout) -> str:
    return json.dumps(layout_to_dict(layout))


def loads_layout(text: str) -> QueueLayout:
    return layout_from_dict(json.loads(text))
