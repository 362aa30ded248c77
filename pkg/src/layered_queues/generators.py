"""Seeded graph generators, including the fan/tightness family."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .embedding import Embedding, RotationBuilder
from .errors import BadParameters
from .graph import Graph

KINDS = ("grid", "fan", "tightness", "random_triangulation", "complete", "cycle", "tree", "path")


@dataclass(frozen=True)
class GeneratorSpec:
    kind: str
    params: dict = field(default_factory=dict)
    seed: int = 0


def grid_vertex(n: int, x: int, y: int) -> int:
    return y * n + x


def grid_graph(n: int) -> Graph:
    if n < 1:
        raise BadParameters("grid needs n >= 1")
    edges = []
    for y in range(n):
        for x in range(n):
            v = grid_vertex(n, x, y)
            if x + 1 < n:
                edges.append((v, v + 1))
            if y + 1 < n:
                edges.append((v, v + n))
    return Graph.from_edges(n * n, edges)


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise BadParameters("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def random_tree(n: int, seed: int = 0) -> Graph:
    if n < 1:
        raise BadParameters("tree needs n >= 1")
    rnd = random.Random(seed)
    return Graph.from_edges(n, [(v, rnd.randrange(v)) for v in range(1, n)])


def fan_graph(ell: int) -> Graph:
    """Path on 9*ell^2 + 3*ell vertices plus a dominant vertex (the last id)."""
    if ell < 1:
        raise BadParameters("fan needs ell >= 1")
    p = 9 * ell * ell + 3 * ell
    edges = [(i, i + 1) for i in range(p - 1)] + [(i, p) for i in range(p)]
    return Graph.from_edges(p + 1, edges)


def tightness_graph(k: int, ell: int) -> Graph:
    """Treewidth-k graph forcing K_{k+1} in the quotient of any layered-width-ell partition."""
    if k < 2 or ell < 1:
        raise BadParameters("tightness needs k >= 2 and ell >= 1")
    if k == 2:
        return fan_graph(ell)
    inner = tightness_graph(k - 1, ell)
    edges = []
    for c in range(3 * ell):
        off = c * inner.n
        edges.extend((u + off, v + off) for u, v in inner.edges)
    apex = 3 * ell * inner.n
    edges.extend((v, apex) for v in range(apex))
    return Graph.from_edges(apex + 1, edges)


def random_triangulation(n: int, seed: int = 0, flips: int | None = None) -> Embedding:
    """Random simple plane triangulation on ``n`` vertices.

    Vertices are stacked into uniformly chosen faces, then ``flips`` random
    legal edge flips (default ``2n``) are applied.  Not uniform over
    triangulations; deterministic per seed.
    """
    if n < 3:
        raise BadParameters("random triangulation needs n >= 3")
    rnd = random.Random(seed)
    b = RotationBuilder(3)
    for u, v in ((0, 1), (1, 2), (2, 0)):
        b.insert_after(u, None, v)
        b.insert_after(v, None, u)
    # face orbits as (a, c, d) with darts a->c, c->d, d->a
    faces = [(0, 1, 2), (0, 2, 1)]
    for x in range(3, n):
        fi = rnd.randrange(len(faces))
        a, c, d = faces[fi]
        b.add_vertex()
        b.insert_after(c, a, x)
        b.insert_after(d, c, x)
        b.insert_after(a, d, x)
        b.rot[x] = [c, a, d]
        b.nbrs[x] = {a, c, d}
        faces[fi] = (a, c, x)
        faces.append((c, d, x))
        faces.append((d, a, x))
    if flips is None:
        flips = 2 * n
    if n >= 5:
        for _ in range(flips):
            u = rnd.randrange(n)
            v = rnd.choice(b.rot[u])
            c = b.succ(u, v)
            d = b.succ(v, u)
            if c == d or b.has_edge(c, d) or len(b.rot[u]) <= 3 or len(b.rot[v]) <= 3:
                continue
            b.remove_edge(u, v)
            b.insert_after(c, v, d)
            b.insert_after(d, u, c)
    emb = b.freeze((0, b.rot[0][0]))
    return emb


def generate(spec: GeneratorSpec) -> tuple[Graph, Embedding | None]:
    """Build the graph described by ``spec``; planar-by-construction kinds come embedded."""
    p = spec.params
    try:
        if spec.kind == "grid":
            g = grid_graph(int(p["n"]))
            return g, None
        if spec.kind == "fan":
            return fan_graph(int(p["ell"])), None
        if spec.kind == "tightness":
            return tightness_graph(int(p["k"]), int(p["ell"])), None
        if spec.kind == "random_triangulation":
            emb = random_triangulation(int(p["n"]), spec.seed)
            return emb.graph, emb
        if spec.kind == "complete":
            return complete_graph(int(p["n"])), None
        if spec.kind == "cycle":
            return cycle_graph(int(p["n"])), None
        if spec.kind == "path":
            return path_graph(int(p["n"])), None
        if spec.kind == "tree":
            return random_tree(int(p["n"]), spec.seed), None
    except KeyError as exc:
        raise BadParameters(f"{spec.kind} needs parameter {exc}") from None
    raise BadParameters(f"unknown generator kind {spec.kind!r}")
