from .decompose import (
    DecompositionStats,
    tripod_decomposition,
    tripod_partition,
    vertical_path_decomposition,
    vertical_path_partition,
)
from .sperner import find_sperner_triangle, sperner_colour
from .types import Partition, TreeDecomposition, Tripod, part_vertices, quotient_graph
from .validate import (
    layered_tree_decomposition,
    layered_width_of_decomposition,
    validate_partition,
    validate_tree_decomposition,
    validate_tripod,
)
from .widen import widen_to_width1
from .io import (
    dumps_partition,
    loads_partition,
    partition_from_dict,
    partition_to_dict,
    td_from_dict,
    td_to_dict,
)
