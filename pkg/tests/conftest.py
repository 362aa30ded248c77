from __future__ import annotations

import os
import random

from hypothesis import HealthCheck, settings

from layered_queues.graph import Graph
from layered_queues.partition.types import TreeDecomposition

settings.register_profile(
    "default", max_examples=60, deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile("ci", max_examples=25, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def random_ktree(k: int, n: int, seed: int) -> tuple[Graph, TreeDecomposition]:
    """Random k-tree with the tree-decomposition that built it."""
    rnd = random.Random(seed)
    edges = [(i, j) for i in range(k + 1) for j in range(i + 1, k + 1)]
    bags = [frozenset(range(k + 1))]
    tree_edges = []
    for v in range(k + 1, n):
        b = rnd.randrange(len(bags))
        base = sorted(bags[b])
        drop = rnd.choice(base)
        clique = [u for u in base if u != drop]
        edges.extend((u, v) for u in clique)
        bags.append(frozenset(clique + [v]))
        tree_edges.append((b, len(bags) - 1))
    return Graph.from_edges(n, edges), TreeDecomposition(Graph.from_edges(len(bags), tree_edges), tuple(bags))


def random_planar_subgraph(n: int, seed: int, keep: float) -> Graph:
    """Spanning subgraph of a random triangulation; may be disconnected."""
    from layered_queues.generators import random_triangulation

    rnd = random.Random(seed)
    tri = random_triangulation(max(n, 3), seed)
    return Graph.from_edges(tri.graph.n, [e for e in tri.graph.edges if rnd.random() < keep])
