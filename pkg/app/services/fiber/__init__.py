"""Central fiber: singular locus, the quartic designer and hyperplanes through points."""

from app.services.fiber.design import (
    design_f,
    design_system,
    group_prescription,
    prescribed_form,
    random_prescription,
    uniform_prescription,
)
from app.services.fiber.hyperplanes import (
    HyperplaneSpace,
    check_torically_transverse,
    common_plane,
    edge_points,
    hyperplane_through,
    line_of_hyperplane,
)
from app.services.fiber.locus import edge_locus, edge_point, rational_roots, singular_locus

__all__ = [
    "HyperplaneSpace",
    "check_torically_transverse",
    "common_plane",
    "design_f",
    "design_system",
    "edge_locus",
    "edge_points",
    "edge_point",
    "group_prescription",
    "hyperplane_through",
    "line_of_hyperplane",
    "prescribed_form",
    "random_prescription",
    "rational_roots",
    "singular_locus",
    "uniform_prescription",
]
