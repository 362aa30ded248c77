"""Sperner colouring of a near-triangulation and trichromatic face search."""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from ..embedding import Embedding
from ..errors import BrokenFrame, NoTrichromaticFace
from ..layering import BfsTree


def colour_by_exit(
    parent: Sequence[int | None],
    boundary_colour: Mapping[int, int],
    interior: Iterable[int],
) -> dict[int, int]:
    """Give each interior vertex the colour of the first boundary vertex on its root path."""
    colour = dict(boundary_colour)
    for v in interior:
        if v in colour:
            continue
        chain = []
        u = v
        while u not in colour:
            chain.append(u)
            u = parent[u]
            if u is None:
                raise BrokenFrame(f"tree path from {v} reaches the root without meeting the frame")
        c = colour[u]
        for w in chain:
            colour[w] = c
    return colour


def sperner_colour(
    near_triangulation: Embedding,
    bfs_tree: BfsTree,
    r1: Sequence[int],
    r2: Sequence[int],
    r3: Sequence[int],
) -> dict[int, int]:
    """Colour the boundary paths 1, 2, 3 and every other vertex by its tree exit."""
    boundary = {}
    for c, path in enumerate((r1, r2, r3), 1):
        for v in path:
            boundary[v] = c
    return colour_by_exit(bfs_tree.parent, boundary, range(near_triangulation.graph.n))


def first_trichromatic(faces: Iterable[Sequence[int]], colour: Mapping[int, int]) -> tuple[int, int, int]:
    """First triangle whose colours are 1, 2, 3, returned ordered by colour."""
    get = colour.get
    for face in faces:
        if len(face) != 3:
            continue
        a, b, c = face
        ca, cb = get(a), get(b)
        if ca == cb or ca is None or cb is None:
            continue
        cc = get(c)
        if cc is None or cc == ca or cc == cb:
            continue
        by = {ca: a, cb: b, cc: c}
        return by[1], by[2], by[3]
    raise NoTrichromaticFace("no internal face carries all three colours")


def find_sperner_triangle(near_triangulation: Embedding, colouring: Mapping[int, int]) -> tuple[int, int, int]:
    """Scan internal faces in face-index order for a trichromatic one."""
    outer = near_triangulation.outer_face
    faces = (f for i, f in enumerate(near_triangulation.faces) if i != outer)
    return first_trichromatic(faces, colouring)
