"""Pytest configuration and shared fixtures."""

import numpy as np
import pytest

from app.models.fiber import PrescribedPoint
from app.models.geometry import EDGES, Edge, ProjectivePoint
from app.models.graft import GraftKind
from app.services.fiber.design import design_f
from app.services.fiber.locus import singular_locus
from app.services.graft.assemble import build_recipe
from app.services.graft.builders import degree4_rational
from app.services.obstruction.pairing import symbolic_hyperplane

# affine roots T = s2/s1 on the edges where x survives, and on the others
X_EDGE_ROOTS = [(1, 1), (1, 2), (1, 3), (1, 4)]
OTHER_EDGE_ROOTS = [(1, 1), (1, -1), (1, 2), (2, -1)]


def point(*coords) -> ProjectivePoint:
    return ProjectivePoint.of(*coords)


@pytest.fixture(scope="session")
def prescription():
    """24 roots consistent with the pure powers 24 x^4, y^4, z^4, w^4."""
    points = []
    for edge in EDGES:
        roots = X_EDGE_ROOTS if "x" in [c.value for c in edge.surviving] else OTHER_EDGE_ROOTS
        points.extend(PrescribedPoint(edge=edge, root=r) for r in roots)
    return points


@pytest.fixture(scope="session")
def designed(prescription):
    return design_f(prescription)


@pytest.fixture(scope="session")
def f(designed):
    return designed.f


@pytest.fixture(scope="session")
def locus(f):
    return singular_locus(f)


@pytest.fixture
def base_points():
    """Singular points on {z,w}, {x,w}, {x,y}; the base hyperplane is -8x + 4y - 2z + w."""
    return [point(1, 2, 0, 0), point(0, 1, 2, 0), point(0, 0, 1, 2)]


@pytest.fixture
def elliptic_points():
    """With the node l^n of the base, these span 12x - 4y + 3z + 3w."""
    return [point(1, 3, 0, 0), point(0, 0, 1, -1)]


@pytest.fixture
def base_curve(f, base_points):
    return degree4_rational(f, base_points)


@pytest.fixture
def rational_recipe(f, base_points, elliptic_points):
    return build_recipe(f, base_points, elliptic_points, "l^n", 2)


@pytest.fixture
def genus_recipe(f, base_points):
    return build_recipe(f, base_points, [point(1, 3, 0, 0)], "l^n", 1, kind=GraftKind.GENUS, pencil=1)


@pytest.fixture
def symbolic_h():
    return symbolic_hyperplane()


@pytest.fixture
def rng():
    return np.random.default_rng(7)


@pytest.fixture
def zw():
    return Edge.of("z", "w")
