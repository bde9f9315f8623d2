"""Oriented threshold graphs: construction, recognition, canonical forms, counting."""

from .construction import (
    WeightRealization,
    build_from_weights,
    dtg_build,
    realize_weights,
    threshold_build,
)
from .enumeration import (
    brute_count_classes,
    count_classes,
    count_transitive_orientations,
    enumerate_orientation_classes,
    fibonacci,
)
from .graph import (
    NeighborhoodMap,
    OrientedGraph,
    UndirectedGraph,
    are_isomorphic_bruteforce,
    is_nested_family,
    is_switch_free,
    is_transitive,
)
from .io import emit_edge_list, export_dot, parse_edge_list, parse_sequence
from .recognition import (
    DisplitPartition,
    check_properly_nested,
    displit_partition,
    extract_sequence,
    is_threshold_undirected,
    recognize,
)
from .sequences import (
    BlockForm,
    Symbol,
    TernarySequence,
    canonicalize,
    enumerate_canonical,
    from_blocks,
    is_canonical,
    swap_equal_magnitude,
    to_blocks,
)

__version__ = "0.1.0"
