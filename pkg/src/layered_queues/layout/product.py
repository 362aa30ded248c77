"""Injections of a layered-partitioned graph into a strong product H x P x K_ell."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import WidthMismatch
from ..graph import Graph
from ..layering import Layering
from ..partition.types import Partition

Coord = tuple[int, int, int]


@dataclass(frozen=True)
class ProductInjection:
    host: Graph
    path_length: int
    ell: int
    map: tuple[Coord, ...]

    def problems(self, graph: Graph) -> list[str]:
        out = []
        if len(set(self.map)) != len(self.map):
            out.append("map is not injective")
        for v, (x, i, s) in enumerate(self.map):
            if not (0 <= x < self.host.n and 0 <= i < self.path_length and 0 <= s < self.ell):
                out.append(f"vertex {v} maps outside the product: {(x, i, s)}")
        for u, v in graph.edges:
            (x, i, _), (y, j, _) = self.map[u], self.map[v]
            if abs(i - j) > 1:
                out.append(f"edge ({u}, {v}) spans path coordinates {i} and {j}")
            elif x != y and not self.host.has_edge(x, y):
                out.append(f"edge ({u}, {v}) maps to non-adjacent host vertices {x}, {y}")
        return out

    def is_valid(self, graph: Graph) -> bool:
        return not self.problems(graph)


def product_injection(graph: Graph, partition: Partition, layering: Layering) -> ProductInjection:
    """Map ``v`` to (its part, its layer, its rank among part-mates in that layer)."""
    ell = partition.declared_layered_width
    seen: dict[tuple[int, int], int] = {}
    coords = []
    for v in range(graph.n):
        key = (partition.part_of[v], layering.layer_of[v])
        slot = seen.get(key, 0)
        if slot >= ell:
            raise WidthMismatch(f"part {key[0]} has more than {ell} vertices in layer {key[1]}")
        seen[key] = slot + 1
        coords.append((key[0], key[1], slot))
    return ProductInjection(partition.quotient, len(layering.layers), ell, tuple(coords))
