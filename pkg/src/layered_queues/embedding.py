"""Combinatorial plane embeddings (rotation systems) and planarity testing.

Faces are traced with the rule ``succ(u -> v) = v -> w`` where ``w`` follows
``u`` in the rotation of ``v``.  A face is stored as its vertex walk; the darts
of face ``f`` are ``(f[i], f[i+1 mod len])``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property

from .errors import NonPlanar, ParseError
from .graph import Edge, Graph, norm_edge, to_networkx

Dart = tuple[int, int]


@dataclass(frozen=True)
class Embedding:
    graph: Graph
    rotation: tuple[tuple[int, ...], ...]
    outer_dart: Dart | None
    # edges introduced by triangulate(); empty for embeddings of input graphs
    added_edges: frozenset[Edge] = field(default=frozenset(), compare=False)

    @cached_property
    def _position(self) -> list[dict[int, int]]:
        return [{w: i for i, w in enumerate(r)} for r in self.rotation]

    def succ(self, u: int, v: int) -> int:
        """Third vertex of the dart following ``u -> v`` on its face."""
        r = self.rotation[v]
        return r[(self._position[v][u] + 1) % len(r)]

    @cached_property
    def _traced(self) -> tuple[tuple[tuple[int, ...], ...], dict[Dart, int]]:
        faces: list[tuple[int, ...]] = []
        face_of: dict[Dart, int] = {}
        for v in range(self.graph.n):
            for w in self.rotation[v]:
                if (v, w) in face_of:
                    continue
                walk = []
                a, b = v, w
                while (a, b) not in face_of:
                    face_of[(a, b)] = len(faces)
                    walk.append(a)
                    a, b = b, self.succ(a, b)
                faces.append(tuple(walk))
        return tuple(faces), face_of

    @property
    def faces(self) -> tuple[tuple[int, ...], ...]:
        return self._traced[0]

    def face_of_dart(self, u: int, v: int) -> int:
        return self._traced[1][(u, v)]

    @property
    def outer_face(self) -> int | None:
        if self.outer_dart is None:
            return None
        return self.face_of_dart(*self.outer_dart)

    def outer_vertices(self) -> tuple[int, ...]:
        if self.outer_dart is None:
            return ()
        return self.faces[self.outer_face]

    def with_outer_face(self, face_index: int) -> "Embedding":
        f = self.faces[face_index]
        return Embedding(self.graph, self.rotation, (f[0], f[1]), self.added_edges)

    def refaced_at(self, vertex: int) -> "Embedding":
        """Same embedding with the first face incident to ``vertex`` declared outer."""
        if self.outer_dart is not None and vertex in self.outer_vertices():
            return self
        if not self.rotation[vertex]:
            return self
        w = self.rotation[vertex][0]
        return Embedding(self.graph, self.rotation, (vertex, w), self.added_edges)

    def is_triangulation(self) -> bool:
        n = self.graph.n
        return n >= 3 and self.graph.m == 3 * n - 6 and all(len(f) == 3 for f in self.faces)

    def check(self) -> list[str]:
        """Return a list of problems; empty means the embedding is a valid plane one."""
        problems = []
        g = self.graph
        if len(self.rotation) != g.n:
            return ["rotation has wrong length"]
        for v in range(g.n):
            r = self.rotation[v]
            if len(r) != len(set(r)) or set(r) != g.adj[v]:
                problems.append(f"rotation at {v} is not a permutation of its neighbours")
        if problems:
            return problems
        faces, face_of = self._traced
        if sum(len(f) for f in faces) != 2 * g.m:
            problems.append("face lengths do not sum to 2m")
        comp_of = [0] * g.n
        comps = g.components()
        for i, comp in enumerate(comps):
            for v in comp:
                comp_of[v] = i
        face_count = [0] * len(comps)
        for f in faces:
            face_count[comp_of[f[0]]] += 1
        edge_count = [0] * len(comps)
        for u, _ in g.edges:
            edge_count[comp_of[u]] += 1
        for i, comp in enumerate(comps):
            f = max(face_count[i], 1)
            if len(comp) - edge_count[i] + f != 2:
                problems.append(f"Euler's formula fails on component containing {comp[0]}")
        if self.outer_dart is not None and self.outer_dart not in face_of:
            problems.append("outer dart is not a dart of the graph")
        if self.outer_dart is None and g.m > 0:
            problems.append("missing outer face")
        return problems

    def is_valid(self) -> bool:
        return not self.check()


def planar_embed(graph: Graph) -> Embedding:
    """Embed ``graph`` in the plane or raise :class:`NonPlanar` with a Kuratowski certificate."""
    import networkx as nx

    ok, emb = nx.check_planarity(to_networkx(graph), counterexample=True)
    if not ok:
        cert = sorted(norm_edge(u, v) for u, v in emb.edges())
        raise NonPlanar("graph is not planar (Kuratowski subgraph attached)", cert)
    rotation = tuple(
        tuple(emb.neighbors_cw_order(v)) if graph.adj[v] else () for v in range(graph.n)
    )
    outer = None
    if graph.m:
        v = next(v for v in range(graph.n) if rotation[v])
        outer = (v, rotation[v][0])
    result = Embedding(graph, rotation, outer)
    problems = result.check()
    if problems:
        raise AssertionError(f"planarity routine returned a bad embedding: {problems}")
    return result


class RotationBuilder:
    """Mutable rotation system used while augmenting or generating embeddings."""

    def __init__(self, n: int, rotation=None):
        self.rot: list[list[int]] = [list(r) for r in rotation] if rotation else [[] for _ in range(n)]
        self.nbrs: list[set[int]] = [set(r) for r in self.rot]
        self.added: set[Edge] = set()

    @property
    def n(self) -> int:
        return len(self.rot)

    def add_vertex(self) -> int:
        self.rot.append([])
        self.nbrs.append(set())
        return len(self.rot) - 1

    def succ(self, u: int, v: int) -> int:
        r = self.rot[v]
        return r[(r.index(u) + 1) % len(r)]

    def insert_after(self, v: int, after: int | None, new: int) -> None:
        """Place ``new`` right after ``after`` in the rotation of ``v``."""
        r = self.rot[v]
        if after is None:
            r.append(new)
        else:
            r.insert(r.index(after) + 1, new)
        self.nbrs[v].add(new)

    def add_chord(self, p: int, a: int, v: int, b: int) -> None:
        """Add edge ``a b`` inside the face containing darts ``p->a, a->v, v->b``.

        Splits off the triangle ``a v b``.
        """
        self.insert_after(a, p, b)
        self.insert_after(b, v, a)
        self.added.add(norm_edge(a, b))

    def remove_edge(self, u: int, v: int) -> None:
        self.rot[u].remove(v)
        self.rot[v].remove(u)
        self.nbrs[u].discard(v)
        self.nbrs[v].discard(u)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.nbrs[u]

    def freeze(self, outer: Dart | None, original: Graph | None = None) -> Embedding:
        edges = [(u, w) for u in range(self.n) for w in self.rot[u] if u < w]
        g = Graph.from_edges(self.n, edges)
        added = frozenset()
        if original is not None:
            added = frozenset(e for e in g.edges if not original.has_edge(*e))
        return Embedding(g, tuple(tuple(r) for r in self.rot), outer, added)


# -- serialization ----------------------------------------------------------


def embedding_to_dict(emb: Embedding) -> dict:
    return {
        "n": emb.graph.n,
        "rotation": [list(r) for r in emb.rotation],
        "outer_face": emb.outer_face,
    }


def embedding_from_dict(data: dict) -> Embedding:
    try:
        n = int(data["n"])
        rotation = tuple(tuple(int(w) for w in r) for r in data["rotation"])
        outer_index = data["outer_face"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed embedding: {exc}") from None
    if len(rotation) != n:
        raise ParseError("rotation length does not match n")
    edges = {norm_edge(v, w) for v in range(n) for w in rotation[v]}
    g = Graph.from_edges(n, edges)
    emb = Embedding(g, rotation, None)
    problems = [p for p in emb.check() if p != "missing outer face"]
    if problems:
        raise ParseError("; ".join(problems))
    if outer_index is None:
        return emb
    return emb.with_outer_face(int(outer_index))


def dumps_embedding(emb: Embedding) -> str:
    return json.dumps(embedding_to_dict(emb), indent=None)


def loads_embedding(text: str) -> Embedding:
    return embedding_from_dict(json.loads(text))
