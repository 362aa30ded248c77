from __future__ import annotations

import pytest

from layered_queues.errors import BadParameters
from layered_queues.generators import (
    GeneratorSpec,
    fan_graph,
    generate,
    grid_graph,
    random_triangulation,
    tightness_graph,
)


def test_grid_counts():
    g = grid_graph(3)
    assert (g.n, g.m) == (9, 12)
    for n in range(1, 8):
        assert grid_graph(n).m == 2 * n * (n - 1)


def test_fan_one_has_13_vertices():
    g = fan_graph(1)
    assert g.n == 13
    apex = g.n - 1
    assert g.degree(apex) == 12


@pytest.mark.parametrize("ell", [1, 2])
def test_fan_path_length(ell):
    assert fan_graph(ell).n == 9 * ell * ell + 3 * ell + 1


def test_tightness_recursion_size():
    inner = fan_graph(1).n
    assert tightness_graph(3, 1).n == 3 * inner + 1


@pytest.mark.parametrize("n", [3, 4, 5, 100, 357])
def test_random_triangulation_counts(n):
    emb = random_triangulation(n, 11)
    assert emb.graph.m == 3 * n - 6
    assert emb.is_triangulation() and emb.check() == []


def test_random_triangulation_deterministic():
    a = random_triangulation(80, 7)
    b = random_triangulation(80, 7)
    c = random_triangulation(80, 8)
    assert a.rotation == b.rotation
    assert a.graph != c.graph


def test_generate_dispatch():
    g, emb = generate(GeneratorSpec("random_triangulation", {"n": 100}, 3))
    assert g.m == 294 and emb is not None
    g, emb = generate(GeneratorSpec("cycle", {"n": 6}))
    assert g.m == 6 and emb is None


@pytest.mark.parametrize("spec", [
    GeneratorSpec("grid", {}),
    GeneratorSpec("nope", {"n": 3}),
    GeneratorSpec("fan", {"ell": 0}),
    GeneratorSpec("random_triangulation", {"n": 2}),
])
def test_bad_parameters(spec):
    with pytest.raises(BadParameters):
        generate(spec)
