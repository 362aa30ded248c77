"""Independent re-checks of partitions, tree-decompositions and tripods."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from ..graph import Edge, Graph, norm_edge
from ..layering import BfsTree, Layering, is_vertical_path
from .types import Partition, TreeDecomposition, Tripod, measured_layered_width, part_vertices


@dataclass
class PartitionReport:
    is_valid: bool
    measured_layered_width: int
    quotient_edge_diff: dict = field(default_factory=lambda: {"missing": [], "extra": []})
    problems: list[str] = field(default_factory=list)


def validate_partition(graph: Graph, partition: Partition, layering: Layering) -> PartitionReport:
    """Recompute the layered width and quotient from scratch and compare."""
    problems = []
    owner = [-1] * graph.n
    for i, p in enumerate(partition.parts):
        vs = part_vertices(p)
        if not vs:
            problems.append(f"part {i} is empty")
        for v in vs:
            if not 0 <= v < graph.n:
                problems.append(f"part {i} holds unknown vertex {v}")
            elif owner[v] != -1:
                problems.append(f"vertex {v} in parts {owner[v]} and {i}")
            else:
                owner[v] = i
    uncovered = [v for v in range(graph.n) if owner[v] == -1]
    if uncovered:
        problems.append(f"vertices not covered: {uncovered[:10]}")
    if list(owner) != list(partition.part_of):
        problems.append("part_of disagrees with parts")
    if not layering.is_valid_for(graph):
        problems.append("layering is not a layering of the graph")

    width = measured_layered_width((part_vertices(p) for p in partition.parts), layering)
    if width > partition.declared_layered_width:
        problems.append(
            f"measured layered width {width} exceeds declared {partition.declared_layered_width}"
        )

    expected = set()
    if not uncovered:
        for u, v in graph.edges:
            a, b = owner[u], owner[v]
            if a != b:
                expected.add(norm_edge(a, b))
    actual = set(partition.quotient.edges)
    diff = {"missing": sorted(expected - actual), "extra": sorted(actual - expected)}
    if diff["missing"] or diff["extra"]:
        problems.append("quotient edges differ from the recomputed quotient")
    return PartitionReport(not problems, width, diff, problems)


@dataclass
class TreeDecompositionReport:
    is_valid: bool
    width: int
    violating_vertex: int | None = None
    violating_edge: Edge | None = None
    problem: str | None = None


def _is_tree(tree: Graph) -> bool:
    if tree.n == 0:
        return True
    return tree.m == tree.n - 1 and len(tree.components()) == 1


def validate_tree_decomposition(graph: Graph, td: TreeDecomposition) -> TreeDecompositionReport:
    width = td.width
    if len(td.bags) != td.tree.n:
        return TreeDecompositionReport(False, width, problem="bag count differs from node count")
    if not _is_tree(td.tree):
        return TreeDecompositionReport(False, width, problem="decomposition graph is not a tree")
    nodes_of: list[set[int]] = [set() for _ in range(graph.n)]
    for x, bag in enumerate(td.bags):
        for v in bag:
            if not 0 <= v < graph.n:
                return TreeDecompositionReport(False, width, violating_vertex=v,
                                               problem=f"bag {x} holds unknown vertex {v}")
            nodes_of[v].add(x)
    # a vertex's nodes induce a subforest; it is connected iff it has |nodes|-1 edges
    inner_edges = [0] * graph.n
    for x, y in td.tree.edges:
        for v in td.bags[x] & td.bags[y]:
            inner_edges[v] += 1
    for v in range(graph.n):
        if not nodes_of[v]:
            return TreeDecompositionReport(False, width, violating_vertex=v,
                                           problem=f"vertex {v} is in no bag")
        if inner_edges[v] != len(nodes_of[v]) - 1:
            return TreeDecompositionReport(False, width, violating_vertex=v,
                                           problem=f"bags containing vertex {v} are disconnected")
    for u, v in graph.edges:
        if not nodes_of[u] & nodes_of[v]:
            return TreeDecompositionReport(False, width, violating_edge=(u, v),
                                           problem=f"edge ({u}, {v}) lies in no bag")
    return TreeDecompositionReport(True, width)


def validate_tripod(tripod: Tripod, graph: Graph, tree: BfsTree) -> list[str]:
    """Problems with ``tripod`` as a tripod of ``tree`` inside ``graph``."""
    problems = []
    if not 1 <= len(tripod.legs) <= 3:
        problems.append(f"tripod has {len(tripod.legs)} legs")
    seen: set[int] = set()
    for leg in tripod.legs:
        if not is_vertical_path(leg.vertices, tree):
            problems.append(f"leg {leg.vertices} is not vertical")
        if seen & set(leg.vertices):
            problems.append("legs overlap")
        seen |= set(leg.vertices)
    lows = [leg.lower for leg in tripod.legs]
    for i, a in enumerate(lows):
        for b in lows[i + 1:]:
            if not graph.has_edge(a, b):
                problems.append(f"lower endpoints {a}, {b} are not adjacent")
    for a, b in tripod.clique_edges:
        if a not in lows or b not in lows or not graph.has_edge(a, b):
            problems.append(f"clique edge ({a}, {b}) is not an edge between lower endpoints")
    if not is_connected_set(graph, tripod.vertices):
        problems.append("tripod does not induce a connected subgraph")
    return problems


def is_connected_set(graph: Graph, vertices) -> bool:
    vs = set(vertices)
    if not vs:
        return False
    start = next(iter(vs))
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in graph.adj[u]:
            if w in vs and w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == len(vs)


def layered_tree_decomposition(partition: Partition, td: TreeDecomposition) -> TreeDecomposition:
    """Blow each part index in a quotient bag up to the part's vertices."""
    members = partition.members
    bags = tuple(frozenset(v for p in bag for v in members[p]) for bag in td.bags)
    return TreeDecomposition(td.tree, bags)


def layered_width_of_decomposition(td: TreeDecomposition, layering: Layering) -> int:
    best = 0
    for bag in td.bags:
        counts: dict[int, int] = {}
        for v in bag:
            i = layering.layer_of[v]
            counts[i] = counts.get(i, 0) + 1
        best = max(best, max(counts.values(), default=0))
    return best
