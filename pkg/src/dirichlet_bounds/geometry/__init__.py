"""Geometric data for the eigenvalue bounds: polygons, smooth arcs, tilings."""

from .arcs import (
    N_PARTS,
    THREE_PARTS,
    ArcPartition,
    ChordCheck,
    SmoothArc,
    arc_partition,
    chord_graph_check,
    kj_threshold,
    partition_case,
    three_point_curvature,
)
from .polygon import (
    Polygon,
    inertia_about,
    middle_third_distance,
    moment_of_inertia,
    polygon_metrics,
    polygon_side_threshold,
)
from .tiling import (
    ExtendedVolume,
    Tiling,
    extended_volume_bound,
    square_count_lower,
    squares_disjoint,
    tile_arc,
    tiling_thresholds,
)
