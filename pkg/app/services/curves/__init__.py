"""Degenerate curves: dual graphs, hyperplane sections, validity and DOT export."""

from app.services.curves.graph import (
    bridge_nodes,
    dual_graph,
    genus,
    is_connected,
    node_pieces,
    require_connected,
)
from app.services.curves.render import to_dot
from app.services.curves.section import (
    SECTION_NAMES,
    glue_partners,
    hyperplane_section,
    on_singular_locus,
    relabel,
    section_point,
)
from app.services.curves.validity import validate

__all__ = [
    "SECTION_NAMES",
    "bridge_nodes",
    "dual_graph",
    "genus",
    "glue_partners",
    "hyperplane_section",
    "is_connected",
    "node_pieces",
    "on_singular_locus",
    "relabel",
    "require_connected",
    "section_point",
    "to_dot",
    "validate",
]
