"""BFS layerings, BFS spanning forests and vertical paths."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .errors import BadRoots
from .graph import Graph


@dataclass(frozen=True)
class Layering:
    layers: tuple[tuple[int, ...], ...]
    layer_of: tuple[int, ...]

    @classmethod
    def from_layer_of(cls, layer_of: Sequence[int]) -> "Layering":
        depth = max(layer_of, default=-1) + 1
        layers: list[list[int]] = [[] for _ in range(depth)]
        for v, i in enumerate(layer_of):
            layers[i].append(v)
        return cls(tuple(tuple(l) for l in layers), tuple(layer_of))

    def is_valid_for(self, graph: Graph) -> bool:
        if len(self.layer_of) != graph.n:
            return False
        return all(abs(self.layer_of[u] - self.layer_of[v]) <= 1 for u, v in graph.edges)


@dataclass(frozen=True)
class BfsTree:
    roots: tuple[int, ...]
    parent: tuple[int | None, ...]
    depth: tuple[int, ...]

    @cached_property
    def children(self) -> tuple[tuple[int, ...], ...]:
        kids: list[list[int]] = [[] for _ in self.parent]
        for v, p in enumerate(self.parent):
            if p is not None:
                kids[p].append(v)
        return tuple(tuple(k) for k in kids)

    def path_to_root(self, v: int) -> list[int]:
        out = [v]
        while self.parent[out[-1]] is not None:
            out.append(self.parent[out[-1]])
        return out

    def is_valid_for(self, graph: Graph) -> bool:
        """Parent edges exist, depths step by one, and depths are distances."""
        if len(self.parent) != graph.n:
            return False
        for v, p in enumerate(self.parent):
            if p is None:
                if self.depth[v] != 0 or v not in self.roots:
                    return False
            elif not graph.has_edge(v, p) or self.depth[p] != self.depth[v] - 1:
                return False
        return all(abs(self.depth[u] - self.depth[v]) <= 1 for u, v in graph.edges)


def bfs_layering(graph: Graph, roots: Sequence[int] | str = "auto") -> tuple[Layering, BfsTree]:
    """BFS layering of every component, layer indices shared across components.

    With ``roots="auto"`` each component is rooted at its smallest vertex.
    Neighbours are explored in ascending id order, so results are deterministic.
    """
    comps = graph.components()
    if isinstance(roots, str):
        if roots != "auto":
            raise BadRoots(f"unknown roots spec {roots!r}")
        root_list = [c[0] for c in comps]
    else:
        root_list = list(roots)
        comp_of = {}
        for i, comp in enumerate(comps):
            for v in comp:
                comp_of[v] = i
        hit = sorted(comp_of.get(r, -1) for r in root_list)
        if hit != list(range(len(comps))):
            raise BadRoots("roots must contain exactly one vertex of every component")
    parent: list[int | None] = [None] * graph.n
    depth = [-1] * graph.n
    for r in root_list:
        depth[r] = 0
        queue = deque([r])
        while queue:
            u = queue.popleft()
            for w in sorted(graph.adj[u]):
                if depth[w] < 0:
                    depth[w] = depth[u] + 1
                    parent[w] = u
                    queue.append(w)
    tree = BfsTree(tuple(root_list), tuple(parent), tuple(depth))
    return Layering.from_layer_of(depth), tree


@dataclass(frozen=True)
class VerticalPath:
    """Tree path listed from its upper endpoint down to its lower endpoint."""

    vertices: tuple[int, ...]

    @property
    def upper(self) -> int:
        return self.vertices[0]

    @property
    def lower(self) -> int:
        return self.vertices[-1]


def is_vertical_path(vertices: Sequence[int], tree: BfsTree) -> bool:
    if not vertices:
        return False
    for a, b in zip(vertices, vertices[1:]):
        if tree.parent[b] != a or tree.depth[b] != tree.depth[a] + 1:
            return False
    return True


def as_vertical_path(vertices: Sequence[int], tree: BfsTree) -> VerticalPath:
    """Orient a vertical path top-down, whichever direction it was listed in."""
    vs = tuple(vertices)
    if len(vs) > 1 and tree.depth[vs[0]] > tree.depth[vs[-1]]:
        vs = vs[::-1]
    if not is_vertical_path(vs, tree):
        raise ValueError(f"{vertices} is not a vertical path")
    return VerticalPath(vs)
