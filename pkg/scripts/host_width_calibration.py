#!/usr/bin/env python3
"""Queue counts of the tree-decomposition layout on random k-trees.

A random k-tree of width k is built by attaching each new vertex to a random
k-clique that already exists.  The table compares the measured count with
the target 2^k - 1.
"""

from __future__ import annotations

import argparse
import random
import sys

from layered_queues.graph import Graph
from layered_queues.layout import tree_decomposition_layout, validate_queue_layout, width_bound
from layered_queues.partition.types import TreeDecomposition


def random_ktree(k: int, n: int, seed: int) -> tuple[Graph, TreeDecomposition]:
    rnd = random.Random(seed)
    base = list(range(k + 1))
    edges = [(u, v) for u in base for v in base if u < v]
    bags = [frozenset(base)]
    tree_edges = []
    cliques = [(tuple(base[:i] + base[i + 1:]), 0) for i in range(k + 1)]
    for v in range(k + 1, n):
        clique, node = rnd.choice(cliques)
        edges.extend((u, v) for u in clique)
        bags.append(frozenset(clique) | {v})
        tree_edges.append((node, len(bags) - 1))
        here = len(bags) - 1
        cliques.extend((tuple(x for x in clique if x != drop) + (v,), here) for drop in clique)
    td = TreeDecomposition(Graph.from_edges(len(bags), tree_edges), tuple(bags))
    return Graph.from_edges(n, edges), td


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--widths", type=int, nargs="+", default=[1, 2, 3, 4])
    ap.add_argument("--sizes", type=int, nargs="+", default=[100, 1000, 10_000])
    ap.add_argument("--seeds", type=int, default=3)
    args = ap.parse_args(argv)

    print(f"{'k':>2} {'n':>6} {'target':>6}  counts")
    for k in args.widths:
        for n in args.sizes:
            counts = []
            for seed in range(args.seeds):
                g, td = random_ktree(k, n, seed)
                layout = tree_decomposition_layout(g, td)
                assert validate_queue_layout(g, layout).is_valid
                counts.append(layout.queue_count)
            print(f"{k:>2} {n:>6} {width_bound(k):>6}  {counts}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
