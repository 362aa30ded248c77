"""End-to-end queue layouts of planar graphs."""

from __future__ import annotations

from dataclasses import dataclass

from ..embedding import Embedding, planar_embed
from ..graph import Graph
from ..layering import BfsTree, Layering, VerticalPath, bfs_layering
from ..partition import tripod_partition, vertical_path_partition
from ..partition.types import Partition, TreeDecomposition, Tripod
from ..triangulate import triangulate
from .partition_queue import partition_queue_layout, queue_bound
from .queues import QueueLayout
from .treewidth import tree_decomposition_layout

MODES = ("width1", "tripod")


@dataclass(frozen=True)
class PipelineResult:
    mode: str
    triangulation: Embedding | None
    layering: Layering
    tree: BfsTree
    partition: Partition
    td: TreeDecomposition
    host_layout: QueueLayout
    layout: QueueLayout
    augmentation_stripped: bool = True

    @property
    def ell(self) -> int:
        return self.partition.declared_layered_width

    @property
    def host_queue_count(self) -> int:
        return self.host_layout.queue_count

    @property
    def bound(self) -> int:
        return queue_bound(self.ell, self.host_queue_count)


def _tiny(graph: Graph, mode: str):
    # fewer than three vertices: every vertex is its own part, one bag holds them all
    layering, tree = bfs_layering(graph)
    if mode == "width1":
        parts = [VerticalPath((v,)) for v in range(graph.n)]
    else:
        parts = [Tripod((VerticalPath((v,)),), ()) for v in range(graph.n)]
    partition = Partition.build(graph, parts, 1 if mode == "width1" else 3, layering)
    td = TreeDecomposition(Graph.from_edges(1, []), (frozenset(range(graph.n)),))
    return None, layering, tree, partition, td


def planar_partition(graph: Graph, mode: str = "width1", embedding: Embedding | None = None):
    """Layered partition of a planar graph with a decomposition of its quotient.

    The triangulation is BFS-layered from vertex 0, which is kept on its outer
    face.  The partition is computed for the triangulation and its quotient
    then recomputed for ``graph`` alone, so augmentation edges are stripped.
    Returns (triangulation or None, layering, tree, partition, td).
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    if graph.n < 3:
        return _tiny(graph, mode)
    emb = embedding if embedding is not None else planar_embed(graph)
    plus = triangulate(emb, 0)
    layering, tree = bfs_layering(plus.graph, [0])
    make = vertical_path_partition if mode == "width1" else tripod_partition
    partition, td = make(plus, tree)
    return plus, layering, tree, partition.for_graph(graph), td


def planar_pipeline(
    graph: Graph,
    mode: str = "width1",
    embedding: Embedding | None = None,
    strategy: str = "depth",
) -> PipelineResult:
    """Partition, lay out the quotient, then lay out ``graph`` from the partition."""
    plus, layering, tree, partition, td = planar_partition(graph, mode, embedding)
    host = tree_decomposition_layout(partition.quotient, td)
    layout = partition_queue_layout(graph, partition, layering, host, strategy)
    return PipelineResult(mode, plus, layering, tree, partition, td, host, layout)
