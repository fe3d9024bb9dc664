"""Residue system of a degenerate curve and its kernel, the dual obstruction space."""

import logging
from functools import lru_cache
from typing import Mapping, Optional

from sympy import Matrix

from app.core.errors import RecipeError, ValidationFailed
from app.core.scalars import FIELD, to_scalar
from app.models.algebra import QuarticForm
from app.models.curve import CurveGraph
from app.models.geometry import COORDINATES, Coordinate, Edge
from app.models.obstruction import DualObstruction, PlaneResidueFrame, ResidueSystem
from app.services.curves.graph import require_connected
from app.services.curves.validity import validate

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def residue_frame(plane: Coordinate) -> PlaneResidueFrame:
    return PlaneResidueFrame.of(plane)


def reference_character(edge: Edge) -> tuple[int, ...]:
    """e*_{s2} - e*_{s1} for the surviving coordinates s1 < s2 of the edge."""
    s1, s2 = edge.surviving
    return tuple((c == s2) - (c == s1) for c in COORDINATES)


def residue_sign(plane: "Coordinate | str", edge: Edge) -> int:
    """
    Sign identifying a plane's residue along an edge with the edge's reference character.

    The residue of the plane's form at the edge is its covector indexed by the
    other vanishing coordinate of the edge.
    """
    plane = Coordinate(plane)
    if plane not in edge.vanishing:
        raise ValueError(f"Plane {plane.value}=0 does not contain the edge {edge}")
    other = next(c for c in edge.vanishing if c != plane)
    covector = residue_frame(plane).covectors[other]
    reference = reference_character(edge)
    if covector == reference:
        return 1
    if covector == tuple(-v for v in reference):
        return -1
    raise ValueError(f"Covector {covector} is not a multiple of the character of {edge}")


def residue_system(curve: CurveGraph) -> ResidueSystem:
    """sigma_a c_a + sigma_b c_b = 0 for every node-edge joining components a and b."""
    ids = [c.id for c in curve.components]
    rows = []
    for node in curve.nodes:
        row = [0] * len(ids)
        first, second = (curve.component(e) for e in node.ends)
        edge = Edge.of(first.plane, second.plane)
        row[ids.index(first.id)] += residue_sign(first.plane, edge)
        row[ids.index(second.id)] += residue_sign(second.plane, edge)
        rows.append(tuple(row))
    return ResidueSystem(
        components=tuple(ids), nodes=tuple(n.id for n in curve.nodes), rows=tuple(rows)
    )


def residue_kernel(curve: CurveGraph) -> DualObstruction:
    """Kernel of the residue system, each basis element scaled to 1 at its first nonzero entry."""
    require_connected(curve)
    system = residue_system(curve)
    width = len(system.components)
    matrix = Matrix(system.rows) if system.rows else Matrix.zeros(0, width)
    basis = []
    for vector in matrix.nullspace():
        lead = next(v for v in vector if v != 0)
        basis.append(
            {cid: to_scalar(v / lead) for cid, v in zip(system.components, vector)}
        )
    return DualObstruction(system=system, basis=tuple(basis))


def dual_obstruction_dim(curve: CurveGraph, f: Optional[QuarticForm] = None) -> DualObstruction:
    """
    Dimension and basis of the dual obstruction space of a pre-smoothable curve.

    Args:
        curve: Connected curve
        f: Quartic used to check the S-marks

    Returns:
        The kernel of the residue system; the generator is 1 on the first component
    """
    report = validate(curve, f)
    if not report.pre_smoothable:
        raise ValidationFailed("Curve is not pre-smoothable", report=report)
    dual = residue_kernel(curve)
    logger.info(f"Dual obstruction space of a curve with {len(curve.components)} components: dimension {dual.dimension}")
    return dual


def residue_closure(curve: CurveGraph, assignment: Mapping[str, object]) -> bool:
    """Residues sum to zero on each component and cancel across every node-edge."""
    for component in curve.components:
        residues = residue_frame(component.plane).residues(to_scalar(assignment[component.id]))
        total = [sum((r[i] for r in residues.values()), FIELD.zero) for i in range(4)]
        if any(total):
            return False
    for node in curve.nodes:
        first, second = (curve.component(e) for e in node.ends)
        edge = Edge.of(first.plane, second.plane)
        value = (
            residue_sign(first.plane, edge) * to_scalar(assignment[first.id])
            + residue_sign(second.plane, edge) * to_scalar(assignment[second.id])
        )
        if value:
            return False
    return True


def generator_restriction_compare(
    first: CurveGraph, second: CurveGraph, pairing: Mapping[str, str]
) -> bool:
    """
    Whether the dual generators of two curves agree on paired components.

    Both generators are scaled to 1 at the first paired component before
    comparing.

    Args:
        first: Curve whose components are the pairing's keys
        second: Curve whose components are the pairing's values
        pairing: Component of ``first`` to component of ``second``

    Returns:
        True when the two restrictions coincide on every paired component
    """
    if not pairing:
        raise RecipeError("Empty component pairing")
    for a, b in pairing.items():
        ca, cb = first.component(a), second.component(b)
        if ca.plane != cb.plane or not ca.line.same_line(cb.line):
            raise RecipeError(f"Paired components {a} and {b} do not map to the same line")
    dual_a, dual_b = residue_kernel(first), residue_kernel(second)
    if dual_a.dimension != 1 or dual_b.dimension != 1:
        logger.warning(
            f"Generators not unique: dimensions {dual_a.dimension} and {dual_b.dimension}"
        )
        return False
    anchor = next(iter(pairing))
    ga, gb = dual_a.generator, dual_b.generator
    scale_a, scale_b = ga[anchor], gb[pairing[anchor]]
    if not scale_a or not scale_b:
        return False
    return all(ga[a] / scale_a == gb[b] / scale_b for a, b in pairing.items())
