"""Degree-4 building blocks: hyperplane sections through prescribed singular points."""

import logging
from typing import Sequence

from app.core.errors import DegenerateConfiguration, InputError
from app.core.scalars import ScalarLike, to_scalar
from app.models.algebra import QuarticForm
from app.models.curve import CurveGraph
from app.models.geometry import ProjectivePoint
from app.services.curves.graph import genus
from app.services.curves.section import hyperplane_section, on_singular_locus
from app.services.fiber.hyperplanes import hyperplane_through

logger = logging.getLogger(__name__)


def _require_singular(f: QuarticForm, points: Sequence[ProjectivePoint]) -> None:
    for p in points:
        if not on_singular_locus(f, p):
            raise DegenerateConfiguration(f"{p} is not a singular point of the total space")


def _expect(curve: CurveGraph, nodes: int, marks: int, name: str) -> CurveGraph:
    if len(curve.nodes) != nodes or len(curve.marks) != marks:
        raise DegenerateConfiguration(
            f"{name}: the hyperplane meets the singular locus in {len(curve.marks) // 2} points, "
            f"expected {marks // 2}"
        )
    return curve


def degree4_rational(f: QuarticForm, points: Sequence[ProjectivePoint], label: str = "") -> CurveGraph:
    """
    The degenerate rational curve cut by the hyperplane through three singular points.

    Args:
        f: The quartic
        points: Three singular points not lying in one component
        label: Suffix for component ids

    Returns:
        Four lines, three node-edges and three partnered S-mark pairs
    """
    if len(points) != 3:
        raise InputError(f"A degree-4 rational curve needs exactly 3 singular points, got {len(points)}")
    _require_singular(f, points)
    space = hyperplane_through(points)
    if not space.spread:
        raise DegenerateConfiguration("The three singular points lie in a single component")
    curve = _expect(hyperplane_section(space.unique, f, label), 3, 6, "degree4_rational")
    logger.info(f"Degree-4 rational curve on {space.unique}, genus {genus(curve)}")
    return curve.with_metadata(construction="degree4_rational")


def degree4_elliptic(
    f: QuarticForm,
    points: Sequence[ProjectivePoint],
    through_node: ProjectivePoint,
    label: str = "'",
) -> CurveGraph:
    """The degenerate genus-1 section through two singular points and a node of the base curve."""
    if len(points) != 2:
        raise InputError(f"A degree-4 elliptic curve needs exactly 2 singular points, got {len(points)}")
    _require_singular(f, points)
    space = hyperplane_through(list(points) + [through_node])
    curve = _expect(hyperplane_section(space.unique, f, label), 4, 4, "degree4_elliptic")
    logger.info(f"Degree-4 elliptic curve on {space.unique}")
    return curve.with_metadata(construction="degree4_elliptic")


def degree4_genus2(
    f: QuarticForm,
    singular_point: ProjectivePoint,
    through_node: ProjectivePoint,
    pencil: ScalarLike = 1,
    label: str = "'",
) -> CurveGraph:
    """
    A genus-2 section through one singular point and a node of the base curve.

    The hyperplanes through the two points form a pencil h0 + p*h1 in the
    basis of their solution space; the member at ``pencil`` is taken.
    """
    _require_singular(f, [singular_point])
    space = hyperplane_through([singular_point, through_node])
    h0, h1 = space.basis
    hyperplane = h0 + h1.scale(to_scalar(pencil))
    curve = _expect(hyperplane_section(hyperplane, f, label), 5, 2, "degree4_genus2")
    logger.info(f"Degree-4 genus-2 curve on {hyperplane}")
    return curve.with_metadata(construction="degree4_genus2")
