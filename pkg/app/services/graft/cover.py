"""Cyclic covers of genus-1 dual graphs."""

import logging

from app.core.config import settings
from app.core.errors import InputError, RecipeError
from app.models.curve import CurveGraph, NodeEdge, SMark
from app.services.curves.graph import bridge_nodes, genus

logger = logging.getLogger(__name__)


def sheet_id(item_id: str, sheet: int) -> str:
    return f"{item_id}.{sheet}"


def cut_edge(curve: CurveGraph) -> NodeEdge:
    """The first node-edge on the loop of the dual graph."""
    bridges = bridge_nodes(curve)
    for node in curve.nodes:
        if node.id not in bridges:
            return node
    raise RecipeError("The dual graph has no loop to cover")


def cover(curve: CurveGraph, r: int) -> CurveGraph:
    """
    The cyclic r-fold cover of a genus-1 curve.

    Every component, node and mark is lifted to sheets 0..r-1 with ids
    suffixed ``.s``; the cut edge of the loop joins sheet s to sheet s + 1.
    Image data is unchanged. r = 1 returns the curve itself.
    """
    if r < 1:
        raise InputError(f"Covering degree must be at least 1, got {r}")
    if r > settings.MAX_COVER_DEGREE:
        raise InputError(f"Covering degree {r} exceeds the limit {settings.MAX_COVER_DEGREE}")
    if genus(curve) != 1:
        raise RecipeError(f"Only genus-1 curves are covered, got genus {genus(curve)}")
    if r == 1:
        return curve

    loop_edge = cut_edge(curve)
    components, nodes, marks = [], [], []
    for s in range(r):
        components.extend(c.model_copy(update={"id": sheet_id(c.id, s)}) for c in curve.components)
        for n in curve.nodes:
            target = (s + 1) % r if n.id == loop_edge.id else s
            nodes.append(
                n.model_copy(
                    update={"id": sheet_id(n.id, s), "ends": (sheet_id(n.ends[0], s), sheet_id(n.ends[1], target))}
                )
            )
        for m in curve.marks:
            marks.append(
                SMark(
                    id=sheet_id(m.id, s),
                    component=sheet_id(m.component, s),
                    point=m.point,
                    weight=m.weight,
                    partner=sheet_id(m.partner, s) if m.partner is not None else None,
                )
            )
    logger.debug(f"{r}-fold cover cut along {loop_edge.id}")
    return CurveGraph(
        components=tuple(components),
        nodes=tuple(nodes),
        marks=tuple(marks),
        metadata={**curve.metadata, "construction": "cover", "covering_degree": r},
    )
