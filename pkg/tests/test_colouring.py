from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from layered_queues.errors import BadParameters
from layered_queues.generators import complete_graph, grid_graph, random_triangulation
from layered_queues.layout import colouring_width_bound, low_treewidth_colouring
from layered_queues.partition import validate_tree_decomposition


def check(graph, col):
    assert set().union(*col.classes) == set(range(graph.n))
    assert len(col.complements) == col.c
    for j, piece in enumerate(col.complements):
        # the complement of class j is everything in no class but j
        others = set().union(*(cls for i, cls in enumerate(col.classes) if i != j))
        assert set(piece.vertices) == others
        rep = validate_tree_decomposition(piece.graph, piece.td)
        assert rep.is_valid
        assert rep.width <= colouring_width_bound(col.c)
    colours = col.vertex_colour()
    assert sorted(colours) == list(range(graph.n))


def test_bound():
    assert colouring_width_bound(2) == 26
    assert colouring_width_bound(3) == 44


@pytest.mark.parametrize("c", [2, 3, 4])
def test_grid(c):
    g = grid_graph(12)
    check(g, low_treewidth_colouring(g, c))


@settings(max_examples=25)
@given(st.integers(3, 300), st.integers(0, 10**6), st.sampled_from([2, 3]))
def test_triangulations(n, seed, c):
    emb = random_triangulation(n, seed)
    check(emb.graph, low_treewidth_colouring(emb.graph, c, emb))


def test_c_too_small():
    with pytest.raises(BadParameters):
        low_treewidth_colouring(complete_graph(3), 1)
