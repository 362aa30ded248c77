"""Colourings of planar graphs where every c-1 classes together have small treewidth."""

from __future__ import annotations

from dataclasses import dataclass

from ..embedding import Embedding
from ..errors import BadParameters
from ..graph import Graph
from ..layering import Layering
from ..partition.types import TreeDecomposition
from .pipeline import planar_partition


def colouring_width_bound(c: int, max_bag: int = 9) -> int:
    return max_bag * (2 * c - 1) - 1


@dataclass(frozen=True)
class ComplementPiece:
    """The union of all classes but one, as an induced subgraph with a decomposition."""

    vertices: tuple[int, ...]
    graph: Graph
    td: TreeDecomposition


@dataclass(frozen=True)
class LowTreewidthColouring:
    c: int
    layering: Layering
    classes: tuple[frozenset[int], ...]
    complements: tuple[ComplementPiece, ...]

    def vertex_colour(self) -> dict[int, int]:
        """One class per vertex (its first), numbered from 1."""
        out: dict[int, int] = {}
        for j, cls in enumerate(self.classes, 1):
            for v in cls:
                out.setdefault(v, j)
        return out


def _class_layers(c: int, j: int) -> set[int]:
    return {(2 * j - 2) % (2 * c), 2 * j - 1, (2 * j) % (2 * c)}


def low_treewidth_colouring(
    graph: Graph, c: int, embedding: Embedding | None = None
) -> LowTreewidthColouring:
    """Group BFS layers into ``c`` overlapping classes.

    Class ``j`` holds the layers congruent to ``2j-2, 2j-1, 2j`` modulo ``2c``.
    Dropping class ``j`` leaves everything except the layers congruent to
    ``2j-1``, which falls apart into blocks of ``2c-1`` consecutive layers.
    Each block gets a copy of the quotient decomposition restricted to it,
    and consecutive copies are chained.
    """
    if c < 2:
        raise BadParameters("need c >= 2")
    _, layering, _, partition, td = planar_partition(graph, "width1", embedding)
    layer_of = layering.layer_of
    period = 2 * c
    classes = tuple(
        frozenset(v for v in range(graph.n) if layer_of[v] % period in _class_layers(c, j))
        for j in range(1, c + 1)
    )
    members = partition.members
    complements = []
    for j in range(1, c + 1):
        gap = 2 * j - 1
        keep = [v for v in range(graph.n) if layer_of[v] % period != gap]
        sub, old = graph.induced(keep)
        local = {v: i for i, v in enumerate(old)}
        block_of = {v: (layer_of[v] - 2 * j) // period for v in keep}
        blocks = sorted(set(block_of.values()))
        bags: list[frozenset[int]] = []
        tree_edges: list[tuple[int, int]] = []
        for b in blocks:
            base = len(bags)
            for bag in td.bags:
                bags.append(frozenset(
                    local[v] for p in bag for v in members[p]
                    if v in local and block_of[v] == b
                ))
            tree_edges.extend((base + x, base + y) for x, y in td.tree.edges)
            if base:
                tree_edges.append((base - len(td.bags), base))
        if not bags:
            bags = [frozenset()]
        tree = Graph.from_edges(len(bags), tree_edges)
        complements.append(ComplementPiece(tuple(old), sub, TreeDecomposition(tree, tuple(bags))))
    return LowTreewidthColouring(c, layering, classes, tuple(complements))
