from __future__ import annotations

from ..errors import WidthMismatch
from ..graph import Graph
from .types import Partition, TreeDecomposition


def widen_to_width1(
    graph: Graph, partition: Partition, td: TreeDecomposition
) -> tuple[Partition, TreeDecomposition]:
    """Split every part into layer-slots so each new part meets each layer once.

    Slot ``j`` of a part takes the ``j``-th smallest vertex id of the part in
    every layer.  A quotient bag of ``k+1`` parts becomes a bag of at most
    ``(k+1) * ell`` slots.
    """
    ell = partition.declared_layered_width
    layer_of = partition.layering.layer_of
    slot_members: list[list[list[int]]] = []
    for p, members in enumerate(partition.members):
        by_layer: dict[int, list[int]] = {}
        for v in sorted(members):
            by_layer.setdefault(layer_of[v], []).append(v)
        widest = max(len(vs) for vs in by_layer.values())
        if widest > ell:
            raise WidthMismatch(f"part {p} has {widest} vertices in one layer, declared {ell}")
        slots: list[list[int]] = [[] for _ in range(widest)]
        for vs in by_layer.values():
            for j, v in enumerate(vs):
                slots[j].append(v)
        slot_members.append(slots)

    new_parts = []
    ids_of_part: list[list[int]] = []
    for slots in slot_members:
        ids = []
        for members in slots:
            ids.append(len(new_parts))
            new_parts.append(frozenset(members))
        ids_of_part.append(ids)
    widened = Partition.build(graph, new_parts, 1, partition.layering)
    bags = tuple(frozenset(i for p in bag for i in ids_of_part[p]) for bag in td.bags)
    return widened, TreeDecomposition(td.tree, bags)
