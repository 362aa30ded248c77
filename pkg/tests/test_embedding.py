from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from layered_queues.embedding import (
    Embedding,
    RotationBuilder,
    dumps_embedding,
    loads_embedding,
    planar_embed,
)
from layered_queues.errors import NonPlanar, ParseError
from layered_queues.generators import complete_graph, grid_graph, random_triangulation
from layered_queues.graph import Graph

from conftest import random_planar_subgraph


def k33():
    return Graph.from_edges(6, [(a, b) for a in range(3) for b in range(3, 6)])


def test_k4_faces():
    emb = planar_embed(complete_graph(4))
    assert emb.is_valid()
    assert len(emb.faces) == 4
    assert all(len(f) == 3 for f in emb.faces)
    assert emb.is_triangulation()


def test_grid_euler():
    g = grid_graph(4)
    emb = planar_embed(g)
    assert g.n - g.m + len(emb.faces) == 2


@pytest.mark.parametrize("g", [complete_graph(5), k33()], ids=["K5", "K33"])
def test_nonplanar_certificate(g):
    with pytest.raises(NonPlanar) as info:
        planar_embed(g)
    cert = info.value.certificate
    assert cert and all(g.has_edge(u, v) for u, v in cert)
    # a Kuratowski subgraph has at least 9 edges (K_{3,3}) or its subdivision
    assert len(cert) >= 9


@given(st.integers(3, 60), st.integers(0, 10_000), st.floats(0.2, 1.0))
def test_planar_subgraphs_embed(n, seed, keep):
    g = random_planar_subgraph(n, seed, keep)
    emb = planar_embed(g)
    assert emb.check() == []


def test_face_succ_rule():
    emb = random_triangulation(30, 2)
    for f in emb.faces:
        for i in range(len(f)):
            u, v = f[i], f[(i + 1) % len(f)]
            assert emb.succ(u, v) == f[(i + 2) % len(f)]


def test_round_trip():
    emb = random_triangulation(40, 5)
    back = loads_embedding(dumps_embedding(emb))
    assert back.graph == emb.graph
    assert back.rotation == emb.rotation
    assert back.outer_vertices() == emb.outer_vertices()


def test_round_trip_rejects_garbage():
    with pytest.raises(ParseError):
        loads_embedding('{"n": 2}')


def test_broken_rotation_detected():
    emb = planar_embed(complete_graph(4))
    rot = list(emb.rotation)
    rot[0] = rot[0][:2]
    assert Embedding(emb.graph, tuple(rot), emb.outer_dart).check()


def test_refaced_keeps_rotation():
    emb = random_triangulation(20, 1)
    v = next(v for v in range(20) if v not in emb.outer_vertices())
    re = emb.refaced_at(v)
    assert v in re.outer_vertices()
    assert re.rotation == emb.rotation


def test_builder_chord():
    b = RotationBuilder(4)
    for u, v in ((0, 1), (1, 2), (2, 3), (3, 0)):
        b.insert_after(u, None, v)
        b.insert_after(v, None, u)
    emb = b.freeze((0, b.rot[0][0]))
    assert emb.check() == []
    assert len(emb.faces) == 2
