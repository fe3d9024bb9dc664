"""Hyperplane sections of the central fiber and id-level rewrites of curves."""

import logging
from typing import Mapping, Optional

from app.core.errors import DegenerateConfiguration
from app.core.scalars import evaluate
from app.models.algebra import QuarticForm
from app.models.curve import Component, CurveGraph, NodeEdge, SMark
from app.models.geometry import COORDINATES, Coordinate, Edge, Hyperplane, ProjectivePoint
from app.services.algebra.polynomials import restrict
from app.services.fiber.hyperplanes import line_of_hyperplane

logger = logging.getLogger(__name__)

# the line in {w=0} is l, in {x=0} m, in {y=0} n, in {z=0} k
SECTION_NAMES: tuple[tuple[str, Coordinate], ...] = (
    ("l", Coordinate.W),
    ("m", Coordinate.X),
    ("n", Coordinate.Y),
    ("k", Coordinate.Z),
)


def section_point(hyperplane: Hyperplane, edge: Edge) -> ProjectivePoint:
    """Where the hyperplane meets an edge line: (s1, s2) = (a_s2, -a_s1)."""
    s1, s2 = edge.surviving
    return edge.point(hyperplane[s2], -hyperplane[s1])


def on_singular_locus(f: QuarticForm, point: ProjectivePoint) -> bool:
    """Exact test: the point is interior to an edge and f restricted there vanishes."""
    zeros = point.zero_coordinates()
    if len(zeros) != 2:
        return False
    edge = Edge(vanishing=zeros)
    return not evaluate(restrict(f, edge), [point[c] for c in edge.surviving])


def hyperplane_section(
    hyperplane: Hyperplane, f: Optional[QuarticForm] = None, label: str = ""
) -> CurveGraph:
    """
    The four lines cut on the central fiber by a hyperplane.

    Each of the six pairwise intersections becomes a node-edge, unless f is
    given and the point is singular on the total space; then it becomes a pair
    of partnered S-marks, one on each line.

    Args:
        hyperplane: Hyperplane with all four coefficients nonzero
        f: Quartic used to classify intersections; None keeps every node
        label: Suffix appended to component ids

    Returns:
        The curve with components l, m, n, k
    """
    for c, a in zip(COORDINATES, hyperplane.coefficients):
        if not a:
            raise DegenerateConfiguration(
                f"Hyperplane {hyperplane} passes through the vertex where only {c.value} is nonzero"
            )
    components = [
        Component(id=f"{name}{label}", plane=plane, line=line_of_hyperplane(hyperplane, plane))
        for name, plane in SECTION_NAMES
    ]
    nodes, marks = [], []
    for i, first in enumerate(components):
        for second in components[i + 1:]:
            point = section_point(hyperplane, Edge.of(first.plane, second.plane))
            if f is not None and on_singular_locus(f, point):
                marks.append(
                    SMark(id=f"{first.id}|{second.id}", component=first.id, point=point,
                          partner=f"{second.id}|{first.id}")
                )
                marks.append(
                    SMark(id=f"{second.id}|{first.id}", component=second.id, point=point,
                          partner=f"{first.id}|{second.id}")
                )
            else:
                nodes.append(NodeEdge(id=f"{first.id}^{second.id}", ends=(first.id, second.id), point=point))
    logger.debug(f"Section {hyperplane}: {len(nodes)} nodes, {len(marks)} S-marks")
    return CurveGraph(
        components=tuple(components),
        nodes=tuple(nodes),
        marks=tuple(marks),
        metadata={"construction": "hyperplane_section", "equation": str(hyperplane), "degree": 4},
    )


def glue_partners(curve: CurveGraph) -> CurveGraph:
    """Replace every partnered S-mark pair by a node-edge at the same point."""
    order = {c.id: i for i, c in enumerate(curve.components)}
    glued = []
    for a, b in curve.partner_pairs():
        if order[a.component] > order[b.component]:
            a, b = b, a
        glued.append(
            NodeEdge(id=a.id.replace("|", "^"), ends=(a.component, b.component), point=a.point,
                     weights=(a.weight, b.weight))
        )
    paired = {m.id for pair in curve.partner_pairs() for m in pair}
    return curve.model_copy(
        update={
            "nodes": curve.nodes + tuple(glued),
            "marks": tuple(m for m in curve.marks if m.id not in paired),
        }
    )


def relabel(curve: CurveGraph, mapping: Mapping[str, str]) -> CurveGraph:
    """Rename components; nodes and marks follow. Unmapped ids are kept."""

    def rename(cid: str) -> str:
        return mapping.get(cid, cid)

    return CurveGraph(
        components=tuple(c.model_copy(update={"id": rename(c.id)}) for c in curve.components),
        nodes=tuple(n.model_copy(update={"ends": (rename(n.ends[0]), rename(n.ends[1]))}) for n in curve.nodes),
        marks=tuple(m.model_copy(update={"component": rename(m.component)}) for m in curve.marks),
        metadata=dict(curve.metadata),
    )
