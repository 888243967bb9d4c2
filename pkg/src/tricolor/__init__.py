"""Plane-graph toolkit: structure detection, exact discharging, 3-coloring."""

from .plane_graph import (
    PlaneGraph,
    FaceWalk,
    CycleRef,
    MergeReport,
    PlaneGraphError,
    GraphInputError,
    InvalidCycleError,
    ReductionError,
    IdentificationError,
    trace_faces,
    sides_of_cycle,
    is_separating,
    delete_vertices,
    identify_vertices,
    sub_plane_graph,
    parse_plane_graph,
    format_plane_graph,
    load_plane_graph,
)

__all__ = [
    "PlaneGraph", "FaceWalk", "CycleRef", "MergeReport",
    "PlaneGraphError", "GraphInputError", "InvalidCycleError",
    "ReductionError", "IdentificationError",
    "trace_faces", "sides_of_cycle", "is_separating",
    "delete_vertices", "identify_vertices", "sub_plane_graph",
    "parse_plane_graph", "format_plane_graph", "load_plane_graph",
]
