from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from layered_queues.errors import InvalidDecomposition
from layered_queues.generators import complete_graph, random_tree, random_triangulation
from layered_queues.graph import Graph
from layered_queues.layering import bfs_layering
from layered_queues.layout import tree_decomposition_layout, validate_queue_layout, width_bound
from layered_queues.partition import TreeDecomposition, tripod_partition, vertical_path_partition

from conftest import random_ktree


def tree_td(g):
    bags = tuple(frozenset(e) for e in g.edges) or (frozenset(range(g.n)),)
    index = {}
    for i, (u, v) in enumerate(g.edges):
        index.setdefault(u, []).append(i)
        index.setdefault(v, []).append(i)
    tree_edges = set()
    for ids in index.values():
        tree_edges.update((ids[0], j) for j in ids[1:])
    # edge bags of a tree sharing a vertex form a star; union over vertices is a tree
    return TreeDecomposition(Graph.from_edges(len(bags), tree_edges), bags)


def test_width_bound():
    assert [width_bound(w) for w in range(5)] == [0, 1, 3, 7, 15]


@given(st.integers(2, 200), st.integers(0, 10**6))
def test_trees_get_one_queue(n, seed):
    g = random_tree(n, seed)
    _, td = random_ktree(1, n, seed)
    layout = tree_decomposition_layout(*random_ktree(1, n, seed))
    assert layout.queue_count == 1


def test_triangle():
    g = complete_graph(3)
    td = TreeDecomposition(Graph.from_edges(1, []), (frozenset(range(3)),))
    layout = tree_decomposition_layout(g, td)
    assert validate_queue_layout(g, layout).is_valid and layout.queue_count <= 3


@pytest.mark.parametrize("k", [1, 2, 3, 4])
@pytest.mark.parametrize("n", [30, 300, 3000])
def test_ktrees_meet_target(k, n):
    for seed in range(2):
        g, td = random_ktree(k, n, seed)
        layout = tree_decomposition_layout(g, td)
        rep = validate_queue_layout(g, layout)
        assert rep.is_valid
        assert rep.queue_count <= width_bound(k)


@given(st.integers(3, 300), st.integers(0, 10**6), st.booleans())
def test_quotients_meet_target(n, seed, tripods):
    emb = random_triangulation(n, seed)
    _, tree = bfs_layering(emb.graph, [emb.outer_vertices()[0]])
    p, td = (tripod_partition if tripods else vertical_path_partition)(emb, tree)
    layout = tree_decomposition_layout(p.quotient, td)
    assert validate_queue_layout(p.quotient, layout).is_valid
    assert layout.queue_count <= width_bound(td.width)


def test_tripod_quotient_count_flat_in_n():
    counts = {}
    for n in (100, 1000, 5000):
        emb = random_triangulation(n, 0)
        _, tree = bfs_layering(emb.graph, [emb.outer_vertices()[0]])
        p, td = tripod_partition(emb, tree)
        counts[n] = tree_decomposition_layout(p.quotient, td).queue_count
        assert counts[n] <= width_bound(3)


def test_invalid_decomposition():
    g = complete_graph(3)
    td = TreeDecomposition(Graph.from_edges(1, []), (frozenset({0, 1}),))
    with pytest.raises(InvalidDecomposition):
        tree_decomposition_layout(g, td)
