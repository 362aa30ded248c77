"""Augment a plane graph to a simple plane triangulation."""

from __future__ import annotations

from .embedding import Embedding, RotationBuilder
from .errors import TooSmall


def _connect_components(builder: RotationBuilder, components: list[list[int]]) -> None:
    # Each extra component is dropped into a face at the main component's
    # smallest vertex; appending on both sides keeps the rotation planar.
    anchor = components[0][0]
    for comp in components[1:]:
        b = comp[0]
        builder.insert_after(anchor, None, b)
        builder.insert_after(b, None, anchor)
        builder.added.add((min(anchor, b), max(anchor, b)))


def _trace_faces(builder: RotationBuilder) -> list[list[int]]:
    seen: set[tuple[int, int]] = set()
    faces = []
    for v in range(builder.n):
        for w in builder.rot[v]:
            if (v, w) in seen:
                continue
            walk = []
            a, b = v, w
            while (a, b) not in seen:
                seen.add((a, b))
                walk.append(a)
                a, b = b, builder.succ(a, b)
            faces.append(walk)
    return faces


def _triangulate_face(builder: RotationBuilder, walk: list[int]) -> None:
    """Clip ears off one face walk until only a triangle remains.

    An ear at position i is the chord between its walk neighbours, legal when
    they are distinct and not yet adjacent.  Such a position always exists in
    a face of length >= 4 of a simple plane graph.
    """
    size = len(walk)
    if size <= 3:
        return
    nxt = [(i + 1) % size for i in range(size)]
    prv = [(i - 1) % size for i in range(size)]
    i = 0
    misses = 0
    while size > 3:
        a, v, b = walk[prv[i]], walk[i], walk[nxt[i]]
        if a != b and not builder.has_edge(a, b):
            builder.add_chord(walk[prv[prv[i]]], a, v, b)
            p, q = prv[i], nxt[i]
            nxt[p], prv[q] = q, p
            size -= 1
            i = p
            misses = 0
        else:
            i = nxt[i]
            misses += 1
            if misses > size:
                raise AssertionError("no legal ear in face walk; input embedding is inconsistent")


def triangulate(embedding: Embedding, required_outer_vertex: int) -> Embedding:
    """Return a simple plane triangulation containing the embedded graph spanningly.

    The result records the augmentation edges in ``added_edges`` and has a
    face incident to ``required_outer_vertex`` as its outer face.
    """
    g = embedding.graph
    if g.n < 3:
        raise TooSmall(f"need at least 3 vertices to triangulate, got {g.n}")
    if not 0 <= required_outer_vertex < g.n:
        raise ValueError(f"vertex {required_outer_vertex} out of range")
    builder = RotationBuilder(g.n, embedding.rotation)
    comps = g.components()
    if len(comps) > 1:
        _connect_components(builder, comps)
    for walk in _trace_faces(builder):
        _triangulate_face(builder, walk)
    r = required_outer_vertex
    result = builder.freeze((r, builder.rot[r][0]), original=g)
    if result.graph.m != 3 * g.n - 6:
        raise AssertionError("augmentation did not reach 3n-6 edges")
    return result
