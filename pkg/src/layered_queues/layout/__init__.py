from .colouring import (
    ComplementPiece,
    LowTreewidthColouring,
    colouring_width_bound,
    low_treewidth_colouring,
)
from .partition_queue import layered_ordering, partition_queue_layout, queue_bound
from .path_power import (
    low_degree_edge_colouring,
    path_power_bound,
    path_power_layout,
    power_targets,
    subdivide,
)
from .pipeline import PipelineResult, planar_partition, planar_pipeline
from .product import ProductInjection, product_injection
from .queues import (
    QueueLayout,
    QueueLayoutReport,
    assign_queues_by_depth,
    blowup_layout,
    complete_graph_layout,
    dumps_layout,
    grid_layout,
    layout_from_dict,
    layout_to_dict,
    loads_layout,
    max_rainbow,
    nesting_depths,
    validate_queue_layout,
)
from .treewidth import tree_decomposition_layout, width_bound
