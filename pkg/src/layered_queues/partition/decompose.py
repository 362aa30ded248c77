"""Recursive frame decomposition of a plane triangulation.

A frame is a cycle of the triangulation split into a few labelled paths; the
labels are part ids of the final partition.  Each frame is listed so that the
region it bounds lies on the face of the darts ``c[j] -> c[j+1]``.  Processing
a frame finds a Sperner triangle, walks its corners up the tree to the frame,
emits one decomposition node and pushes up to three smaller frames.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..embedding import Embedding, RotationBuilder
from ..errors import RootNotOnOuterFace
from ..graph import norm_edge
from ..layering import BfsTree, Layering, VerticalPath
from ..graph import Graph
from .sperner import colour_by_exit, first_trichromatic
from .types import Partition, TreeDecomposition, Tripod

Piece = tuple[int, tuple[int, ...]]


@dataclass
class DecompositionStats:
    frames: int = 0
    max_frame_paths: int = 0
    max_bag: int = 0
    shrinking: bool = True


def _split_groups(paths: list[Piece]) -> list[list[Piece]]:
    k = len(paths)
    if k == 1:
        pid, vs = paths[0]
        return [[(pid, vs[:1])], [(pid, vs[1:-1])], [(pid, vs[-1:])]]
    if k == 2:
        # two singletons would form a 2-cycle, impossible in a simple graph
        assert len(paths[0][1]) + len(paths[1][1]) >= 3
        first = min(range(2), key=lambda i: (-len(paths[i][1]), paths[i][1][0]))
        paths = paths[first:] + paths[:first]
        (pid, vs), other = paths
        return [[(pid, vs[:1])], [(pid, vs[1:])], [other]]
    a, b = k // 3, 2 * k // 3
    return [paths[:a], paths[a:b], paths[b:]]


def _suffix_from(group: list[Piece], x: int) -> list[Piece]:
    for idx, (pid, vs) in enumerate(group):
        if x in vs:
            return [(pid, vs[vs.index(x):])] + group[idx + 1:]
    raise AssertionError("split vertex not on its group")


def _prefix_to(group: list[Piece], x: int) -> list[Piece]:
    for idx, (pid, vs) in enumerate(group):
        if x in vs:
            return group[:idx] + [(pid, vs[: vs.index(x) + 1])]
    raise AssertionError("split vertex not on its group")


def _decompose(emb: Embedding, parent, root_paths: list[Piece], parts: list, tripods: bool):
    faces = emb.faces
    face_of = emb._traced[1]
    # for each face, the darts of its edges seen from outside and the faces across them
    across = [(((b, a), face_of[(b, a)]), ((c, b), face_of[(c, b)]), ((a, c), face_of[(a, c)]))
              for a, b, c in faces]
    max_paths = 3 if tripods else 6
    bags: list[frozenset[int]] = []
    tree_edges: list[tuple[int, int]] = []
    stats = DecompositionStats()
    stack: list[tuple[list[Piece], int | None, int | None]] = [(root_paths, None, None)]

    while stack:
        paths, parent_node, parent_size = stack.pop()
        stats.frames += 1
        stats.max_frame_paths = max(stats.max_frame_paths, len(paths))
        assert 1 <= len(paths) <= max_paths
        cycle = [v for _, vs in paths for v in vs]
        size = len(cycle)
        node = len(bags)
        if parent_node is not None:
            tree_edges.append((parent_node, node))
        frame_ids = {pid for pid, _ in paths}

        if size == 3 and emb.succ(cycle[0], cycle[1]) == cycle[2]:
            bags.append(frozenset(frame_ids))
            if parent_size is not None and parent_size <= 3:
                stats.shrinking = False
            continue

        on_frame = set(cycle)
        darts = [(cycle[j], cycle[(j + 1) % size]) for j in range(size)]
        boundary = set(darts) | {(b, a) for a, b in darts}
        region = {face_of[d] for d in darts}
        todo = list(region)
        while todo:
            for dart, g in across[todo.pop()]:
                if g not in region and dart not in boundary:
                    region.add(g)
                    todo.append(g)
        interior = sorted(on_frame.union(*(faces[f] for f in region)) - on_frame)
        region_size = size + len(interior)
        if parent_size is not None and region_size >= parent_size:
            stats.shrinking = False

        groups = _split_groups(paths)
        boundary_colour = {v: c for c, group in enumerate(groups, 1) for _, vs in group for v in vs}
        colour = colour_by_exit(parent, boundary_colour, interior)
        tau = first_trichromatic((faces[f] for f in sorted(region)), colour)
        assert emb.succ(tau[0], tau[1]) == tau[2], "Sperner triangle has unexpected orientation"

        climbs = []
        for v in tau:
            q = []
            while v not in on_frame:
                q.append(v)
                v = parent[v]
            climbs.append((tuple(q), v))

        new_ids: list[int | None] = [None, None, None]
        if tripods:
            legs = [VerticalPath(q[::-1]) for q, _ in climbs if q]
            if legs:
                lows = [leg.lower for leg in legs]
                clique = tuple(norm_edge(lows[i], lows[j])
                               for i in range(len(lows)) for j in range(i + 1, len(lows)))
                parts.append(Tripod(tuple(legs), clique))
                new_ids = [len(parts) - 1] * 3
        else:
            for i, (q, _) in enumerate(climbs):
                if q:
                    parts.append(VerticalPath(q[::-1]))
                    new_ids[i] = len(parts) - 1
        bag = frame_ids | {x for x in new_ids if x is not None}
        bags.append(frozenset(bag))

        for i in range(3):
            j = (i + 1) % 3
            (qi, top_i), (qj, top_j) = climbs[i], climbs[j]
            sub = _suffix_from(groups[i], top_i) + _prefix_to(groups[j], top_j)
            if tripods:
                bipod = qj[::-1] + qi
                if bipod:
                    sub.append((new_ids[0], bipod))
            else:
                if qj:
                    sub.append((new_ids[j], qj[::-1]))
                if qi:
                    sub.append((new_ids[i], qi))
            if sum(len(vs) for _, vs in sub) <= 2:
                continue  # degenerate: just the edge v_i v_{i+1}
            stack.append((sub, node, region_size))

    stats.max_bag = max(len(b) for b in bags)
    tree = Graph.from_edges(len(bags), tree_edges)
    return TreeDecomposition(tree, tuple(bags)), stats


def _root_frame(emb: Embedding, tree: BfsTree) -> tuple[int, int, int]:
    if not emb.is_triangulation():
        raise ValueError("input embedding is not a plane triangulation")
    if len(tree.parent) != emb.graph.n or len(tree.roots) != 1:
        raise ValueError("tree must be a spanning tree of the triangulation with one root")
    outer = emb.outer_vertices()
    if tree.roots[0] not in outer:
        raise RootNotOnOuterFace(f"tree root {tree.roots[0]} is not on the outer face {outer}")
    a, b, c = outer
    return a, c, b


def vertical_path_decomposition(triangulation: Embedding, bfs_tree: BfsTree):
    cycle = _root_frame(triangulation, bfs_tree)
    parts: list = [VerticalPath((v,)) for v in cycle]
    root_paths = [(i, (v,)) for i, v in enumerate(cycle)]
    td, stats = _decompose(triangulation, bfs_tree.parent, root_paths, parts, tripods=False)
    layering = Layering.from_layer_of(bfs_tree.depth)
    partition = Partition.build(triangulation.graph, parts, 1, layering)
    return partition, td, stats


def vertical_path_partition(triangulation: Embedding, bfs_tree: BfsTree) -> tuple[Partition, TreeDecomposition]:
    """Partition a triangulation into vertical paths of ``bfs_tree``.

    The quotient gets a tree-decomposition with bags of at most 9 parts; the
    three outer vertices are singleton parts sharing the root bag.
    """
    partition, td, _ = vertical_path_decomposition(triangulation, bfs_tree)
    return partition, td


def _with_apex(emb: Embedding) -> tuple[Embedding, int]:
    """Add a vertex in the outer face joined to the three outer vertices."""
    a, b, c = emb.outer_vertices()
    builder = RotationBuilder(emb.graph.n, emb.rotation)
    r = builder.add_vertex()
    builder.insert_after(b, a, r)
    builder.insert_after(c, b, r)
    builder.insert_after(a, c, r)
    builder.rot[r] = [b, a, c]
    builder.nbrs[r] = {a, b, c}
    return builder.freeze((r, b)), r


def tripod_decomposition(triangulation: Embedding, bfs_tree: BfsTree):
    cycle = _root_frame(triangulation, bfs_tree)
    plus, apex = _with_apex(triangulation)
    parent = list(bfs_tree.parent) + [None]
    parent[bfs_tree.roots[0]] = apex
    parts: list = [Tripod((VerticalPath((v,)),), ()) for v in cycle]
    root_paths = [(i, (v,)) for i, v in enumerate(cycle)]
    td, stats = _decompose(plus, parent, root_paths, parts, tripods=True)
    layering = Layering.from_layer_of(bfs_tree.depth)
    partition = Partition.build(triangulation.graph, parts, 3, layering)
    return partition, td, stats


def tripod_partition(triangulation: Embedding, bfs_tree: BfsTree) -> tuple[Partition, TreeDecomposition]:
    """Partition a triangulation into tripods with a width-3 quotient decomposition."""
    partition, td, _ = tripod_decomposition(triangulation, bfs_tree)
    return partition, td
