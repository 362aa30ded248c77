from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from layered_queues.embedding import planar_embed
from layered_queues.errors import RootNotOnOuterFace, WidthMismatch
from layered_queues.generators import complete_graph, grid_graph, grid_vertex, random_triangulation
from layered_queues.graph import Graph
from layered_queues.layering import Layering, VerticalPath, bfs_layering, is_vertical_path
from layered_queues.partition import (
    Partition,
    TreeDecomposition,
    dumps_partition,
    layered_tree_decomposition,
    layered_width_of_decomposition,
    loads_partition,
    tripod_partition,
    validate_partition,
    validate_tree_decomposition,
    validate_tripod,
    vertical_path_partition,
    widen_to_width1,
)
from layered_queues.partition.decompose import tripod_decomposition, vertical_path_decomposition
from layered_queues.partition.validate import is_connected_set


def rooted(emb):
    _, tree = bfs_layering(emb.graph, [emb.outer_vertices()[0]])
    return tree


def test_triangle_vertical_paths():
    emb = planar_embed(complete_graph(3))
    tree = rooted(emb)
    p, td = vertical_path_partition(emb, tree)
    assert sorted(p.members) == [(0,), (1,), (2,)]
    assert p.quotient.m == 3
    assert td.bags == (frozenset({0, 1, 2}),)


def test_k4_singletons():
    emb = planar_embed(complete_graph(4))
    p, td = vertical_path_partition(emb, rooted(emb))
    assert len(p.parts) == 4 and p.quotient.m == 6
    assert validate_tree_decomposition(p.quotient, td).is_valid
    assert td.max_bag <= 9


def test_root_bag_holds_outer_vertices():
    emb = random_triangulation(120, 3)
    p, td = vertical_path_partition(emb, rooted(emb))
    outer_parts = {p.part_of[v] for v in emb.outer_vertices()}
    assert all(len(p.members[i]) == 1 for i in outer_parts)
    assert outer_parts <= td.bags[0]


def test_root_not_on_outer_face():
    emb = random_triangulation(30, 1)
    inner = next(v for v in range(30) if v not in emb.outer_vertices())
    _, tree = bfs_layering(emb.graph, [inner])
    with pytest.raises(RootNotOnOuterFace):
        vertical_path_partition(emb, tree)
    with pytest.raises(RootNotOnOuterFace):
        tripod_partition(emb, tree)


@given(st.integers(3, 400), st.integers(0, 10**6))
def test_vertical_path_invariants(n, seed):
    emb = random_triangulation(n, seed)
    tree = rooted(emb)
    p, td, stats = vertical_path_decomposition(emb, tree)
    assert all(is_vertical_path(part.vertices, tree) for part in p.parts)
    rep = validate_partition(emb.graph, p, p.layering)
    assert rep.is_valid and rep.measured_layered_width == 1
    t = validate_tree_decomposition(p.quotient, td)
    assert t.is_valid and t.width <= 8
    assert stats.max_frame_paths <= 6 and stats.shrinking


@given(st.integers(3, 400), st.integers(0, 10**6))
def test_tripod_invariants(n, seed):
    emb = random_triangulation(n, seed)
    tree = rooted(emb)
    p, td, stats = tripod_decomposition(emb, tree)
    for part in p.parts:
        assert validate_tripod(part, emb.graph, tree) == []
        assert is_connected_set(emb.graph, part.vertices)
    rep = validate_partition(emb.graph, p, p.layering)
    assert rep.is_valid and rep.measured_layered_width <= 3
    t = validate_tree_decomposition(p.quotient, td)
    assert t.is_valid and td.max_bag <= 4
    assert p.quotient.m <= max(3 * p.quotient.n - 6, p.quotient.n - 1)
    planar_embed(p.quotient)
    assert stats.max_frame_paths <= 3 and stats.shrinking


@given(st.integers(3, 200), st.integers(0, 10**6), st.booleans())
def test_layered_treewidth_cross_check(n, seed, tripods):
    emb = random_triangulation(n, seed)
    make = tripod_partition if tripods else vertical_path_partition
    p, td = make(emb, rooted(emb))
    k = td.width
    ell = p.declared_layered_width
    big = layered_tree_decomposition(p, td)
    assert validate_tree_decomposition(emb.graph, big).is_valid
    assert layered_width_of_decomposition(big, p.layering) <= (k + 1) * ell


@given(st.integers(3, 200), st.integers(0, 10**6))
def test_widen_tripods(n, seed):
    emb = random_triangulation(n, seed)
    p, td = tripod_partition(emb, rooted(emb))
    wide, wtd = widen_to_width1(emb.graph, p, td)
    rep = validate_partition(emb.graph, wide, wide.layering)
    assert rep.is_valid and rep.measured_layered_width == 1
    t = validate_tree_decomposition(wide.quotient, wtd)
    assert t.is_valid and t.width <= (td.width + 1) * 3 - 1 <= 11


def test_widen_identity_for_width_one():
    emb = random_triangulation(60, 2)
    p, td = vertical_path_partition(emb, rooted(emb))
    wide, wtd = widen_to_width1(emb.graph, p, td)
    assert [sorted(m) for m in wide.members] == [sorted(m) for m in p.members]
    assert wide.quotient == p.quotient
    assert wtd.bags == td.bags


def test_widen_detects_mismatch():
    g = Graph.from_edges(2, [(0, 1)])
    layering = Layering.from_layer_of([0, 0])
    p = Partition.build(g, [frozenset({0, 1})], 1, layering)
    td = TreeDecomposition(Graph.from_edges(1, []), (frozenset({0}),))
    with pytest.raises(WidthMismatch):
        widen_to_width1(g, p, td)


def test_grid_columns_valid():
    n = 4
    g = grid_graph(n)
    layering = Layering.from_layer_of([v // n for v in range(n * n)])  # rows
    cols = [VerticalPath(tuple(grid_vertex(n, x, y) for y in range(n))) for x in range(n)]
    p = Partition.build(g, cols, 1, layering)
    rep = validate_partition(g, p, layering)
    assert rep.is_valid and rep.measured_layered_width == 1
    assert p.quotient.edges == ((0, 1), (1, 2), (2, 3))


def test_two_per_layer_rejected_at_width_one():
    g = Graph.from_edges(3, [(0, 1), (1, 2)])
    layering = Layering.from_layer_of([0, 1, 1])
    p = Partition.build(g, [frozenset({0}), frozenset({1, 2})], 1, layering)
    rep = validate_partition(g, p, layering)
    assert not rep.is_valid and rep.measured_layered_width == 2


def test_quotient_diff_reported():
    g = Graph.from_edges(3, [(0, 1), (1, 2)])
    layering = Layering.from_layer_of([0, 1, 2])
    p = Partition.build(g, [frozenset({0}), frozenset({1}), frozenset({2})], 1, layering)
    bad = Partition(p.parts, p.part_of, Graph.from_edges(3, [(0, 1), (0, 2)]), 1, layering)
    rep = validate_partition(g, bad, layering)
    assert rep.quotient_edge_diff == {"missing": [(1, 2)], "extra": [(0, 2)]}


def test_td_validator():
    g = complete_graph(3)
    one = TreeDecomposition(Graph.from_edges(1, []), (frozenset({0, 1, 2}),))
    assert validate_tree_decomposition(g, one).width == 2
    split = TreeDecomposition(Graph.from_edges(2, [(0, 1)]), (frozenset({0, 1}), frozenset({1, 2})))
    rep = validate_tree_decomposition(g, split)
    assert not rep.is_valid and rep.violating_edge == (0, 2)
    gap = TreeDecomposition(Graph.from_edges(3, [(0, 1), (1, 2)]),
                            (frozenset({0, 1, 2}), frozenset({1}), frozenset({0})))
    rep = validate_tree_decomposition(g, gap)
    assert not rep.is_valid and rep.violating_vertex == 0


def test_for_graph_strips_augmentation():
    from layered_queues.triangulate import triangulate

    g = grid_graph(5)
    plus = triangulate(planar_embed(g), 0)
    p, td = vertical_path_partition(plus, rooted(plus))
    q = p.for_graph(g)
    assert q.quotient.is_subgraph_of(p.quotient)
    assert validate_partition(g, q, q.layering).is_valid
    assert validate_tree_decomposition(q.quotient, td).is_valid


@pytest.mark.parametrize("tripods", [False, True])
def test_json_round_trip(tripods):
    emb = random_triangulation(80, 6)
    make = tripod_partition if tripods else vertical_path_partition
    p, td = make(emb, rooted(emb))
    back, btd = loads_partition(dumps_partition(p, td))
    assert back == p
    assert btd == td
