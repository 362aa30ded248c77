from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from layered_queues.errors import WidthMismatch
from layered_queues.generators import complete_graph, grid_graph, grid_vertex, random_triangulation
from layered_queues.graph import Graph
from layered_queues.layering import Layering, VerticalPath
from layered_queues.layout import ProductInjection, planar_pipeline, product_injection
from layered_queues.oracle import exact_treewidth
from layered_queues.partition import validate_tree_decomposition
from layered_queues.partition.types import Partition


def test_grid_columns_into_path_times_path():
    n = 6
    g = grid_graph(n)
    layering = Layering.from_layer_of([v // n for v in range(n * n)])
    parts = [VerticalPath(tuple(grid_vertex(n, x, y) for y in range(n))) for x in range(n)]
    inj = product_injection(g, Partition.build(g, parts, 1, layering), layering)
    assert inj.is_valid(g)
    assert inj.ell == 1 and inj.path_length == n
    assert sorted(inj.host.edges) == [(i, i + 1) for i in range(n - 1)]


def test_triangle():
    g = complete_graph(3)
    result = planar_pipeline(g)
    inj = product_injection(g, result.partition, result.layering)
    assert inj.is_valid(g)
    assert exact_treewidth(inj.host) <= 8


@given(st.integers(3, 300), st.integers(0, 10**6))
def test_pipeline_output(n, seed):
    emb = random_triangulation(n, seed)
    result = planar_pipeline(emb.graph, embedding=emb)
    inj = product_injection(emb.graph, result.partition, result.layering)
    assert inj.is_valid(emb.graph)
    rep = validate_tree_decomposition(inj.host, result.td)
    assert rep.is_valid and rep.width <= 8


def test_problems_are_named():
    g = Graph.from_edges(3, [(0, 1), (1, 2)])
    host = Graph.from_edges(2, [])
    inj = ProductInjection(host, 3, 1, ((0, 0, 0), (1, 1, 0), (0, 0, 0)))
    problems = inj.problems(g)
    assert "map is not injective" in problems
    assert any("non-adjacent" in p for p in problems)
    far = ProductInjection(Graph.from_edges(1, []), 5, 1, ((0, 0, 0), (0, 2, 0), (0, 3, 0)))
    assert any("spans path coordinates" in p for p in far.problems(g))


def test_width_mismatch():
    g = complete_graph(3)
    layering = Layering.from_layer_of([0, 0, 0])
    partition = Partition.build(g, [frozenset(range(3))], 1, layering)
    with pytest.raises(WidthMismatch):
        product_injection(g, partition, layering)
