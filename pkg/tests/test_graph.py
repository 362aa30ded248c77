from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from layered_queues.errors import ParseError
from layered_queues.graph import Graph, format_graph, norm_edge, parse_graph


@st.composite
def graphs(draw, max_n=15):
    n = draw(st.integers(0, max_n))
    if n < 2:
        return Graph.from_edges(n, [])
    pairs = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda e: e[0] != e[1])
    return Graph.from_edges(n, draw(st.lists(pairs, max_size=3 * n)))


def test_from_edges_dedupes_and_sorts():
    g = Graph.from_edges(4, [(2, 1), (1, 2), (0, 3)])
    assert g.edges == ((0, 3), (1, 2))
    assert g.m == 2
    assert g.has_edge(2, 1) and not g.has_edge(0, 1)


def test_rejects_loops_and_bad_ids():
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 3)])


def test_components_ordered_by_smallest_vertex():
    g = Graph.from_edges(6, [(4, 5), (0, 2), (1, 3)])
    assert g.components() == [[0, 2], [1, 3], [4, 5]]


def test_induced_relabels():
    g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    sub, old = g.induced([1, 2, 4])
    assert old == [1, 2, 4]
    assert sub.edges == ((0, 1),)


@given(graphs())
def test_text_round_trip(g):
    assert parse_graph(format_graph(g)) == g


@given(graphs())
def test_degree_sum(g):
    assert sum(g.degree(v) for v in range(g.n)) == 2 * g.m


def test_comments_and_blank_lines():
    g = parse_graph("# a path\n3 2\n\n0 1  # first\n1 2\n")
    assert g.edges == ((0, 1), (1, 2))


@pytest.mark.parametrize("text", ["", "3\n", "2 1\n0 1\n1 0\n", "2 1\nx y\n", "2 1\n0 5\n"])
def test_parse_errors(text):
    with pytest.raises(ValueError):
        parse_graph(text)


def test_parse_error_type():
    with pytest.raises(ParseError):
        parse_graph("2 2\n0 1\n")


def test_norm_edge():
    assert norm_edge(5, 2) == (2, 5)
