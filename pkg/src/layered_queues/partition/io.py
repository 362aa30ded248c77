"""JSON round-trips for partitions and tree-decompositions."""

from __future__ import annotations

import json

from ..errors import ParseError
from ..graph import Graph, norm_edge
from ..layering import Layering, VerticalPath
from .types import Partition, TreeDecomposition, Tripod, part_vertices


def _part_to_dict(part) -> dict:
    if isinstance(part, VerticalPath):
        return {"kind": "path", "vertices": list(part.vertices)}
    if isinstance(part, Tripod):
        return {
            "kind": "tripod",
            "legs": [list(leg.vertices) for leg in part.legs],
            "clique_edges": [list(e) for e in part.clique_edges],
        }
    return {"kind": "set", "vertices": list(part_vertices(part))}


def _part_from_dict(data: dict):
    kind = data["kind"]
    if kind == "path":
        return VerticalPath(tuple(int(v) for v in data["vertices"]))
    if kind == "tripod":
        legs = tuple(VerticalPath(tuple(int(v) for v in leg)) for leg in data["legs"])
        return Tripod(legs, tuple(norm_edge(int(u), int(v)) for u, v in data["clique_edges"]))
    if kind == "set":
        return frozenset(int(v) for v in data["vertices"])
    raise ParseError(f"unknown part kind {kind!r}")


def partition_to_dict(partition: Partition) -> dict:
    return {
        "declared_layered_width": partition.declared_layered_width,
        "layer_of": list(partition.layering.layer_of),
        "parts": [_part_to_dict(p) for p in partition.parts],
        "quotient_edges": [list(e) for e in partition.quotient.edges],
    }


def partition_from_dict(data: dict) -> Partition:
    try:
        parts = tuple(_part_from_dict(p) for p in data["parts"])
        layering = Layering.from_layer_of([int(i) for i in data["layer_of"]])
        part_of = [-1] * len(layering.layer_of)
        for i, p in enumerate(parts):
            for v in part_vertices(p):
                part_of[v] = i
        quotient = Graph.from_edges(len(parts), [tuple(e) for e in data["quotient_edges"]])
        return Partition(parts, tuple(part_of), quotient, int(data["declared_layered_width"]), layering)
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise ParseError(f"malformed partition: {exc}") from None


def td_to_dict(td: TreeDecomposition) -> dict:
    return {
        "bags": {str(i): sorted(b) for i, b in enumerate(td.bags)},
        "tree_edges": [list(e) for e in td.tree.edges],
    }


def td_from_dict(data: dict) -> TreeDecomposition:
    try:
        bags_in = data["bags"]
        bags = tuple(frozenset(int(v) for v in bags_in[str(i)]) for i in range(len(bags_in)))
        tree = Graph.from_edges(len(bags), [tuple(e) for e in data["tree_edges"]])
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed tree-decomposition: {exc}") from None
    return TreeDecomposition(tree, bags)


def dumps_partition(partition: Partition, td: TreeDecomposition | None = None) -> str:
    data = {"partition": partition_to_dict(partition)}
    if td is not None:
        data["tree_decomposition"] = td_to_dict(td)
    return json.dumps(data)


def loads_partition(text: str) -> tuple[Partition, TreeDecomposition | None]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not JSON: {exc}") from None
    td = td_from_dict(data["tree_decomposition"]) if "tree_decomposition" in data else None
    return partition_from_dict(data["partition"]), td
