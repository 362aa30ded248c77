"""Queue layouts of a graph from a layered partition and a layout of its quotient."""

from __future__ import annotations

from collections import defaultdict

from ..errors import HostMismatch, WidthMismatch
from ..graph import Edge, Graph
from ..layering import Layering
from ..partition.types import Partition
from .queues import QueueLayout, assign_queues_by_depth, nesting_depths

STRATEGIES = ("depth", "structured")


def queue_bound(ell: int, k: int) -> int:
    return 3 * ell * k + (3 * ell) // 2


def layered_ordering(partition: Partition, layering: Layering, host_layout: QueueLayout) -> list[int]:
    """Layers in sequence; inside a layer, parts in host order, then vertex id."""
    host_pos = host_layout.position
    key = lambda v: (layering.layer_of[v], host_pos[partition.part_of[v]], v)
    return sorted(range(len(partition.part_of)), key=key)


def _check(graph: Graph, partition: Partition, layering: Layering, host_layout: QueueLayout) -> None:
    h = len(partition.parts)
    if sorted(host_layout.ordering) != list(range(h)):
        raise HostMismatch(f"host layout orders {len(host_layout.ordering)} vertices, partition has {h} parts")
    missing = [e for e in partition.quotient.edges if e not in host_layout.queue_of]
    if missing:
        raise HostMismatch(f"quotient edge {missing[0]} has no host queue")
    if len(layering.layer_of) != graph.n or len(partition.part_of) != graph.n:
        raise HostMismatch("partition or layering does not cover the graph")
    members = defaultdict(int)
    for v in range(graph.n):
        members[(partition.part_of[v], layering.layer_of[v])] += 1
    width = max(members.values(), default=0)
    if width > partition.declared_layered_width:
        raise WidthMismatch(f"measured layered width {width} exceeds declared "
                            f"{partition.declared_layered_width}")


def _edge_class(u: int, v: int, partition: Partition, layering: Layering, host_layout: QueueLayout):
    a, b = partition.part_of[u], partition.part_of[v]
    i, j = layering.layer_of[u], layering.layer_of[v]
    if i == j:
        if a == b:
            return ("intra-level intra-bag",)
        return ("intra-level inter-bag", host_layout.queue_of[(min(a, b), max(a, b))])
    if a == b:
        return ("inter-level intra-bag",)
    if i > j:
        a, b = b, a
    alpha = host_layout.queue_of[(min(a, b), max(a, b))]
    forward = host_layout.position[a] < host_layout.position[b]
    return ("inter-level inter-bag", alpha, forward)


def _structured(graph: Graph, partition: Partition, layering: Layering,
                host_layout: QueueLayout, ordering: list[int]) -> dict[Edge, int]:
    pos = {v: i for i, v in enumerate(ordering)}
    slot = {}
    for v in ordering:
        # vertices of one part within one layer are consecutive in the ordering
        prev = ordering[pos[v] - 1] if pos[v] else None
        same = (prev is not None and partition.part_of[prev] == partition.part_of[v]
                and layering.layer_of[prev] == layering.layer_of[v])
        slot[v] = slot[prev] + 1 if same else 0

    classes: dict[tuple, list[Edge]] = defaultdict(list)
    for u, v in graph.edges:
        classes[_edge_class(u, v, partition, layering, host_layout)].append((u, v))

    queue_of: dict[Edge, int] = {}
    offset = 0
    for cls in sorted(classes, key=repr):
        edges = classes[cls]
        if cls[0] == "intra-level intra-bag":
            local = {e: (abs(slot[e[0]] - slot[e[1]]) + 1) // 2 - 1 for e in edges}
        else:
            local = nesting_depths(edges, pos)
        for e, q in local.items():
            queue_of[e] = offset + q
        offset += max(local.values()) + 1
    return queue_of


def partition_queue_layout(
    graph: Graph,
    partition: Partition,
    layering: Layering,
    host_layout: QueueLayout,
    strategy: str = "depth",
) -> QueueLayout:
    """Lay out ``graph`` from a layered partition and a queue layout of its quotient.

    ``depth`` assigns queues by nesting depth (optimal for the ordering);
    ``structured`` gives each edge class its own block of queues.
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}")
    _check(graph, partition, layering, host_layout)
    ordering = layered_ordering(partition, layering, host_layout)
    if strategy == "depth":
        return assign_queues_by_depth(graph, ordering)
    return QueueLayout(tuple(ordering), _structured(graph, partition, layering, host_layout, ordering)).canonical()
