"""Validity hierarchy of degenerate curves."""

import logging
from typing import Optional

from app.models.algebra import QuarticForm
from app.models.curve import CurveGraph, ValidityReport, Violation, ViolationKind
from app.models.geometry import Edge
from app.services.curves.section import on_singular_locus
from app.services.fiber.hyperplanes import check_torically_transverse, edge_points

logger = logging.getLogger(__name__)


def _transversality(curve: CurveGraph) -> list[Violation]:
    return [
        Violation(kind=ViolationKind.NOT_TRANSVERSE, location=c.id, detail=str(c.line))
        for c in curve.components
        if not check_torically_transverse(c.line)
    ]


def _nodes(curve: CurveGraph) -> list[Violation]:
    violations = []
    for node in curve.nodes:
        first, second = (curve.component(e) for e in node.ends)
        if first.plane == second.plane:
            violations.append(
                Violation(kind=ViolationKind.SAME_PLANE, location=node.id,
                          detail=f"both branches map to {first.plane.value}=0")
            )
        else:
            edge = Edge.of(first.plane, second.plane)
            on_lines = first.line.contains(node.point) and second.line.contains(node.point)
            if not edge.contains(node.point) or not on_lines:
                violations.append(
                    Violation(kind=ViolationKind.NODE_OFF_EDGE, location=node.id,
                              detail=f"{node.point} is not on {edge} and both lines")
                )
        if node.weights[0] != node.weights[1]:
            violations.append(
                Violation(kind=ViolationKind.WEIGHT_MISMATCH, location=node.id,
                          detail=f"w' = {node.weights[0]}, w'' = {node.weights[1]}")
            )
    return violations


def _edge_points(curve: CurveGraph) -> list[Violation]:
    """Each point where a transverse component meets an edge line is a node or an S-mark."""
    violations = []
    for c in curve.components:
        if not check_torically_transverse(c.line):
            continue
        taken = [n.point for n in curve.nodes_at(c.id)] + [m.point for m in curve.marks_at(c.id)]
        for edge, point in edge_points(c.line):
            if not any(point.same_as(p) for p in taken):
                violations.append(
                    Violation(kind=ViolationKind.EDGE_POINT_UNGLUED, location=c.id,
                              detail=f"{point} on {edge} is neither a node nor an S-mark")
                )
    return violations


def _marks(curve: CurveGraph, f: Optional[QuarticForm]) -> list[Violation]:
    violations = []
    for mark in curve.marks:
        component = curve.component(mark.component)
        if not component.line.contains(mark.point):
            violations.append(Violation(kind=ViolationKind.MARK_OFF_LINE, location=mark.id))
        if len(mark.point.zero_coordinates()) != 2 or (
            f is not None and not on_singular_locus(f, mark.point)
        ):
            violations.append(
                Violation(kind=ViolationKind.MARK_NOT_SINGULAR, location=mark.id,
                          detail=f"{mark.point} is not a singular point of the total space")
            )
        clashes = [
            other.id for other in curve.marks_at(mark.component)
            if other.id != mark.id and other.point.same_as(mark.point)
        ] + [n.id for n in curve.nodes_at(mark.component) if n.point.same_as(mark.point)]
        if clashes:
            violations.append(
                Violation(kind=ViolationKind.MARK_NOT_SMOOTH, location=mark.id,
                          detail=f"shares its point with {', '.join(sorted(clashes))}")
            )
    return violations


def _multiplicities(curve: CurveGraph) -> list[Violation]:
    return [
        Violation(kind=ViolationKind.HIGHER_MULTIPLICITY, location=c.id,
                  detail=f"degree {c.multiplicity} in its plane")
        for c in curve.components
        if c.multiplicity != 1
    ]


def validate(curve: CurveGraph, f: Optional[QuarticForm] = None) -> ValidityReport:
    """
    Check a curve against the validity hierarchy.

    Every condition is checked and every failure reported: transversality of
    the component lines, the pre-log conditions at nodes and at every point
    where a component meets an edge line, S-marks at distinct
    smooth points over the singular locus (tested against f when given), and
    degree one per component.

    Args:
        curve: Structurally well-formed curve
        f: The quartic defining the singular locus

    Returns:
        Monotone validity flags and the list of violations
    """
    transversality = _transversality(curve)
    nodes = _nodes(curve) + _edge_points(curve)
    marks = _marks(curve, f)
    multiplicities = _multiplicities(curve)

    torically_transverse = not transversality
    pre_log = torically_transverse and not nodes
    pre_smoothable = pre_log and not marks
    report = ValidityReport(
        torically_transverse=torically_transverse,
        pre_log=pre_log,
        pre_smoothable=pre_smoothable,
        simply_pre_smoothable=pre_smoothable and not multiplicities,
        violations=tuple(transversality + nodes + marks + multiplicities),
    )
    logger.debug(f"Validated curve with {len(report.violations)} violations")
    return report
