"""Compressibility of pseudo-essential surfaces in handlebodies."""

from .handlebody import (
    DiskSide,
    Handlebody,
    HandlebodyError,
    PsBall,
    SpineEdge,
    SpineGraph,
    build_handlebody,
    build_spine,
    cycle_rank,
    ps_balls,
)
from .surface import (
    Arc,
    Census,
    DEdge,
    Piece,
    SurfaceComplex,
    census,
    components,
    disk_intersection_count,
    euler_characteristic,
    is_orientable,
    validate,
)

__all__ = [
    "Arc",
    "Census",
    "DEdge",
    "DiskSide",
    "Handlebody",
    "HandlebodyError",
    "Piece",
    "PsBall",
    "SpineEdge",
    "SpineGraph",
    "SurfaceComplex",
    "build_handlebody",
    "build_spine",
    "census",
    "components",
    "cycle_rank",
    "disk_intersection_count",
    "euler_characteristic",
    "is_orientable",
    "ps_balls",
    "validate",
]
