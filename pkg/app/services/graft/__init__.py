"""Degree-4 building blocks, cyclic covers and grafted curves."""

from app.services.graft.assemble import (
    build_recipe,
    check_recipe,
    find_recipe,
    graft_genus,
    graft_rational,
)
from app.services.graft.builders import degree4_elliptic, degree4_genus2, degree4_rational
from app.services.graft.cover import cover, cut_edge, sheet_id

__all__ = [
    "build_recipe",
    "check_recipe",
    "cover",
    "cut_edge",
    "degree4_elliptic",
    "degree4_genus2",
    "degree4_rational",
    "find_recipe",
    "graft_genus",
    "graft_rational",
    "sheet_id",
]
