"""Hyperplanes through singular points and the lines they cut on the planes."""

import logging
from typing import Optional, Sequence

from pydantic import BaseModel, ConfigDict
from sympy import Matrix

from app.core.errors import DegenerateConfiguration
from app.core.scalars import FIELD, is_rational, as_rational, to_scalar
from app.models.fiber import LineInPlane, plane_coordinates
from app.models.geometry import COORDINATES, Coordinate, Edge, Hyperplane, ProjectivePoint

logger = logging.getLogger(__name__)


class HyperplaneSpace(BaseModel):
    """Linear space of hyperplanes through a set of points."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    basis: tuple[Hyperplane, ...]
    points: tuple[ProjectivePoint, ...] = ()
    spread: Optional[bool] = None

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def unique(self) -> Hyperplane:
        if self.dimension != 1:
            raise DegenerateConfiguration(
                f"Expected a unique hyperplane, the solution space has dimension {self.dimension}"
            )
        return self.basis[0]


def _to_sympy(value):
    return as_rational(value) if is_rational(value) else value.as_expr()


def _from_sympy(value):
    return FIELD.from_expr(value) if value.free_symbols else to_scalar(value)


def _normalize(coefficients: list) -> Hyperplane:
    """Scale so the first nonzero coefficient is 1."""
    lead = next(c for c in coefficients if c)
    return Hyperplane(coefficients=tuple(c / lead for c in coefficients))


def common_plane(points: Sequence[ProjectivePoint]) -> Optional[Coordinate]:
    """A coordinate vanishing at all the points, if there is one."""
    for c in COORDINATES:
        if all(not p[c] for p in points):
            return c
    return None


def hyperplane_through(points: Sequence[ProjectivePoint]) -> HyperplaneSpace:
    """
    All hyperplanes through up to three points.

    With three points the space must be one-dimensional; ``spread`` records
    whether the points avoid lying together in one component of the central fiber.
    """
    if len(points) > 3:
        raise DegenerateConfiguration(f"At most 3 points may be prescribed, got {len(points)}")
    if not points:
        basis = tuple(
            Hyperplane(coefficients=tuple(1 if i == j else 0 for j in range(4))) for i in range(4)
        )
        return HyperplaneSpace(basis=basis)

    rows = Matrix([[_to_sympy(v) for v in p.coords] for p in points])
    kernel = rows.nullspace()
    basis = tuple(_normalize([_from_sympy(v) for v in vector]) for vector in kernel)
    if len(basis) != 4 - len(points):
        raise DegenerateConfiguration(
            f"The {len(points)} points impose only {4 - len(basis)} conditions on hyperplanes"
        )
    spread = common_plane(points) is None if len(points) == 3 else None
    if spread is False:
        logger.warning("The three points lie in a single component of the central fiber")
    logger.debug(f"Hyperplanes through {len(points)} points: dimension {len(basis)}")
    return HyperplaneSpace(basis=basis, points=tuple(points), spread=spread)


def check_torically_transverse(line: LineInPlane) -> bool:
    """True when the line misses the three coordinate points of its plane."""
    return all(line.coefficients)


def line_of_hyperplane(hyperplane: Hyperplane, plane: "Coordinate | str") -> LineInPlane:
    """The line cut by a hyperplane on the plane {plane = 0}."""
    plane = Coordinate(plane)
    values = [hyperplane[c] for c in plane_coordinates(plane)]
    if not any(values):
        raise DegenerateConfiguration(f"Hyperplane {hyperplane} contains the plane {plane.value}=0")
    return LineInPlane(plane=plane, coefficients=tuple(values))


def edge_points(line: LineInPlane) -> list[tuple[Edge, ProjectivePoint]]:
    """Where a torically transverse line meets the three edge lines of its plane."""
    points = []
    for other in plane_coordinates(line.plane):
        edge = Edge.of(line.plane, other)
        s1, s2 = edge.surviving
        points.append((edge, edge.point(line.coefficient(s2), -line.coefficient(s1))))
    return points
