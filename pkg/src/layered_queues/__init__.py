"""Layered partitions of planar graphs and the queue layouts they give."""

from .embedding import Embedding, planar_embed
from .errors import LayeredQueuesError, NonPlanar
from .generators import GeneratorSpec, generate
from .graph import Graph, parse_graph, format_graph
from .layering import BfsTree, Layering, VerticalPath, bfs_layering
from .layout import (
    QueueLayout,
    assign_queues_by_depth,
    max_rainbow,
    partition_queue_layout,
    planar_pipeline,
    tree_decomposition_layout,
    validate_queue_layout,
)
from .partition import (
    Partition,
    TreeDecomposition,
    Tripod,
    tripod_partition,
    validate_partition,
    validate_tree_decomposition,
    vertical_path_partition,
)
from .triangulate import triangulate

__version__ = "0.1.0"
