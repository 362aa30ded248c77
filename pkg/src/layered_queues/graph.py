"""Simple undirected graphs on vertices ``0..n-1`` and the edge-list text format."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

from .errors import ParseError

Edge = tuple[int, int]


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph.

    ``edges`` is sorted and holds each edge once as ``(u, v)`` with ``u < v``.
    """

    n: int
    edges: tuple[Edge, ...]
    adj: tuple[frozenset[int], ...] = field(repr=False, compare=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        es: set[Edge] = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            es.add(norm_edge(u, v))
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in es:
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, tuple(sorted(es)), tuple(frozenset(a) for a in adj))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def neighbours(self, v: int) -> list[int]:
        return sorted(self.adj[v])

    def components(self) -> list[list[int]]:
        """Connected components, each sorted, ordered by smallest vertex."""
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in self.adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        queue.append(w)
            comps.append(sorted(comp))
        return comps

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph relabelled to ``0..k-1``; returns it with the old ids."""
        old = sorted(set(vertices))
        new_of = {v: i for i, v in enumerate(old)}
        es = [
            (new_of[u], new_of[v])
            for u, v in self.edges
            if u in new_of and v in new_of
        ]
        return Graph.from_edges(len(old), es), old

    def subgraph_edges(self, vertices: Iterable[int]) -> list[Edge]:
        vs = set(vertices)
        return [(u, v) for u, v in self.edges if u in vs and v in vs]

    def is_subgraph_of(self, other: "Graph") -> bool:
        return self.n <= other.n and all(other.has_edge(u, v) for u, v in self.edges)


def to_networkx(graph: Graph):
    import networkx as nx

    g = nx.Graph()
    g.add_nodes_from(range(graph.n))
    g.add_edges_from(graph.edges)
    return g


# -- text format ------------------------------------------------------------
#
# first line "n m", then m lines "u v"; '#' starts a comment.


def format_graph(graph: Graph) -> str:
    lines = [f"{graph.n} {graph.m}"]
    lines.extend(f"{u} {v}" for u, v in graph.edges)
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected two integers, got {raw!r}")
        try:
            rows.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
    if not rows:
        raise ParseError("missing header line 'n m'")
    (n, m), body = rows[0], rows[1:]
    if len(body) != m:
        raise ParseError(f"header declares {m} edges, found {len(body)}")
    try:
        return Graph.from_edges(n, body)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def read_graph(path: str | Path) -> Graph:
    return parse_graph(Path(path).read_text())


def write_graph(graph: Graph, path: str | Path) -> None:
    Path(path).write_text(format_graph(graph))
