from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from layered_queues.embedding import planar_embed
from layered_queues.errors import TooSmall
from layered_queues.generators import grid_graph, path_graph, random_tree
from layered_queues.graph import Graph
from layered_queues.triangulate import triangulate

from conftest import random_planar_subgraph


def _check(g, root=0):
    plus = triangulate(planar_embed(g), root)
    assert plus.check() == []
    assert plus.is_triangulation()
    assert g.is_subgraph_of(plus.graph)
    assert root in plus.outer_vertices()
    assert set(plus.added_edges) == set(plus.graph.edges) - set(g.edges)
    return plus


@given(st.integers(3, 80), st.integers(0, 10_000), st.floats(0.0, 1.0))
def test_random_planar(n, seed, keep):
    _check(random_planar_subgraph(n, seed, keep))


@given(st.integers(3, 60), st.integers(0, 1000))
def test_trees(n, seed):
    g = random_tree(n, seed)
    _check(g, root=seed % n)


@pytest.mark.parametrize("g", [
    Graph.from_edges(3, []),
    Graph.from_edges(5, [(0, 1)]),
    path_graph(3),
    grid_graph(5),
    Graph.from_edges(7, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 6), (6, 3)]),
], ids=["edgeless", "one-edge", "P3", "grid", "two-cycles"])
def test_small_cases(g):
    plus = _check(g)
    assert plus.graph.m == 3 * g.n - 6


def test_too_small():
    with pytest.raises(TooSmall):
        triangulate(planar_embed(Graph.from_edges(2, [(0, 1)])), 0)


def test_idempotent_on_triangulation():
    from layered_queues.generators import random_triangulation

    emb = random_triangulation(50, 4)
    plus = triangulate(emb, 0)
    assert plus.graph == emb.graph and not plus.added_edges
