from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence, Union

from ..graph import Edge, Graph, norm_edge
from ..layering import Layering, VerticalPath


@dataclass(frozen=True)
class Tripod:
    """Up to three disjoint vertical paths whose lower endpoints form a clique."""

    legs: tuple[VerticalPath, ...]
    clique_edges: tuple[Edge, ...]

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(v for leg in self.legs for v in leg.vertices)


Part = Union[VerticalPath, Tripod, frozenset]


def part_vertices(part: Part) -> tuple[int, ...]:
    if isinstance(part, (VerticalPath, Tripod)):
        return part.vertices
    return tuple(sorted(part))


@dataclass(frozen=True)
class TreeDecomposition:
    tree: Graph
    bags: tuple[frozenset[int], ...]

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1

    @property
    def max_bag(self) -> int:
        return self.width + 1


def quotient_graph(graph: Graph, part_of: Sequence[int], num_parts: int) -> Graph:
    edges = set()
    for u, v in graph.edges:
        a, b = part_of[u], part_of[v]
        if a != b:
            edges.add(norm_edge(a, b))
    return Graph.from_edges(num_parts, edges)


@dataclass(frozen=True)
class Partition:
    parts: tuple[Part, ...]
    part_of: tuple[int, ...]
    quotient: Graph
    declared_layered_width: int
    layering: Layering

    @classmethod
    def build(
        cls, graph: Graph, parts: Iterable[Part], declared_width: int, layering: Layering
    ) -> "Partition":
        parts = tuple(parts)
        part_of = [-1] * graph.n
        for i, p in enumerate(parts):
            for v in part_vertices(p):
                if part_of[v] != -1:
                    raise ValueError(f"vertex {v} lies in two parts")
                part_of[v] = i
        if -1 in part_of:
            raise ValueError(f"vertex {part_of.index(-1)} is in no part")
        return cls(parts, tuple(part_of), quotient_graph(graph, part_of, len(parts)),
                   declared_width, layering)

    def for_graph(self, graph: Graph) -> "Partition":
        """Same parts, quotient recomputed for a spanning subgraph ``graph``."""
        return Partition(self.parts, self.part_of,
                         quotient_graph(graph, self.part_of, len(self.parts)),
                         self.declared_layered_width, self.layering)

    @cached_property
    def members(self) -> tuple[tuple[int, ...], ...]:
        return tuple(part_vertices(p) for p in self.parts)

    def measured_layered_width(self) -> int:
        return measured_layered_width(self.members, self.layering)


def measured_layered_width(members: Iterable[Sequence[int]], layering: Layering) -> int:
    best = 0
    for vs in members:
        counts: dict[int, int] = {}
        for v in vs:
            i = layering.layer_of[v]
            counts[i] = counts.get(i, 0) + 1
        if counts:
            best = max(best, max(counts.values()))
    return best
