"""Exhaustive ground truth for tiny graphs, and a sampled tightness check."""

from __future__ import annotations

import random
from bisect import bisect_left

from .errors import TooLarge
from .generators import fan_graph
from .graph import Graph
from .partition.types import quotient_graph

QUEUE_LIMIT = 9
TREEWIDTH_LIMIT = 12


def _rainbow_of(intervals: list[tuple[int, int]]) -> int:
    tails: list[int] = []
    for _, b in sorted(intervals):
        i = bisect_left(tails, -b)
        if i == len(tails):
            tails.append(-b)
        else:
            tails[i] = -b
    return len(tails)


def exact_queue_number(graph: Graph, return_ordering: bool = False):
    """Minimum over all vertex orderings of the largest rainbow.

    Depth-first over ordering prefixes.  The rainbow of the edges already
    inside a prefix never shrinks, so a prefix is dropped once it reaches the
    best count found.  An ordering and its reverse have the same rainbows, so
    only orderings whose first vertex is smaller than their last are kept.
    """
    n = graph.n
    if n > QUEUE_LIMIT:
        raise TooLarge(f"exact queue-number is limited to {QUEUE_LIMIT} vertices, got {n}")
    if graph.m == 0:
        return (0, list(range(n))) if return_ordering else 0
    best = [graph.m + 1]
    best_order: list[int] = []
    order: list[int] = []
    pos = [-1] * n
    intervals: list[tuple[int, int]] = []

    def extend(current: int) -> None:
        if current >= best[0]:
            return
        if len(order) == n:
            best[0] = current
            best_order[:] = order
            return
        p = len(order)
        for v in range(n):
            if pos[v] >= 0:
                continue
            if p == n - 1 and v < order[0]:
                continue  # the reverse ordering was already searched
            new = sorted(pos[u] for u in graph.adj[v] if pos[u] >= 0)
            rainbow = current
            for a in new:
                inside = [iv for iv in intervals if iv[0] > a]
                rainbow = max(rainbow, 1 + _rainbow_of(inside))
            pos[v] = p
            order.append(v)
            intervals.extend((a, p) for a in new)
            extend(rainbow)
            del intervals[len(intervals) - len(new):]
            order.pop()
            pos[v] = -1
            if best[0] == 1:
                return  # a graph with an edge needs at least one queue

    extend(0)
    if return_ordering:
        return best[0], best_order
    return best[0]


def exact_treewidth(graph: Graph) -> int:
    """Treewidth by dynamic programming over vertex subsets.

    ``tw(S)`` is the best width of an elimination of ``S`` placed first; the
    cost of eliminating ``v`` after ``S`` is the number of vertices outside
    ``S + v`` reachable from ``v`` through ``S``.
    """
    n = graph.n
    if n > TREEWIDTH_LIMIT:
        raise TooLarge(f"exact treewidth is limited to {TREEWIDTH_LIMIT} vertices, got {n}")
    if n == 0:
        return -1
    nbr = [sum(1 << u for u in graph.adj[v]) for v in range(n)]

    def q_size(s: int, v: int) -> int:
        seen = 1 << v
        frontier = [v]
        out = 0
        while frontier:
            u = frontier.pop()
            for w in range(n):
                if nbr[u] >> w & 1 and not seen >> w & 1:
                    seen |= 1 << w
                    if s >> w & 1:
                        frontier.append(w)
                    else:
                        out += 1
        return out

    full = (1 << n) - 1
    tw = [n] * (1 << n)
    tw[0] = -1
    for s in range(1, full + 1):
        best = n
        rest = s
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            prev = s ^ low
            cand = max(tw[prev], q_size(prev, v))
            if cand < best:
                best = cand
        tw[s] = best
    return tw[full]


def _random_fan_layering(rnd: random.Random, path_len: int) -> list[int]:
    # apex in layer 1; path vertices in layers 0..2, consecutive ones at most one apart
    layer = [rnd.randrange(3)]
    for _ in range(path_len - 1):
        step = rnd.choice([x for x in (-1, 0, 1) if 0 <= layer[-1] + x <= 2])
        layer.append(layer[-1] + step)
    return layer + [1]


def _random_width1_partition(rnd: random.Random, layer: list[int]) -> list[int]:
    part_of = [-1] * len(layer)
    used: list[set[int]] = []
    for v in rnd.sample(range(len(layer)), len(layer)):
        options = [p for p, ls in enumerate(used) if layer[v] not in ls]
        if options and rnd.random() < 0.7:
            p = rnd.choice(options)
        else:
            p = len(used)
            used.append(set())
        used[p].add(layer[v])
        part_of[v] = p
    return part_of


def has_triangle(graph: Graph) -> bool:
    return any(graph.adj[u] & graph.adj[v] for u, v in graph.edges)


def sampled_fan_tightness(samples: int = 100_000, seed: int = 0) -> tuple[int, int]:
    """Sample layered-width-1 partitions of fan(1); count quotients with a triangle.

    Returns (samples with K_3 in the quotient, samples drawn).
    """
    g = fan_graph(1)
    rnd = random.Random(seed)
    hits = 0
    for _ in range(samples):
        layer = _random_fan_layering(rnd, g.n - 1)
        part_of = _random_width1_partition(rnd, layer)
        quotient = quotient_graph(g, part_of, max(part_of) + 1)
        hits += has_triangle(quotient)
    return hits, samples
