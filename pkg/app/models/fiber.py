"""The central fiber: four coordinate planes, six edge lines, four vertices."""

from typing import Sequence

from pydantic import BaseModel, ConfigDict, field_validator, model_validator
from sympy.polys.rings import PolyElement

from app.core.scalars import FIELD, Scalar, ScalarLike, format_scalar, to_scalar
from app.models.algebra import QuarticForm
from app.models.geometry import COORDINATES, EDGES, Coordinate, Edge, ProjectivePoint

Vertex = tuple[Coordinate, Coordinate, Coordinate]


def plane_coordinates(plane: Coordinate) -> tuple[Coordinate, Coordinate, Coordinate]:
    """The three coordinates surviving on the plane {plane = 0}, in order."""
    first, second, third = (c for c in COORDINATES if c != plane)
    return first, second, third


class CentralFiber(BaseModel):
    """Incidence data of the boundary of the tetrahedron."""

    model_config = ConfigDict(frozen=True)

    components: tuple[Coordinate, ...]
    edges: tuple[Edge, ...]
    vertices: tuple[Vertex, ...]

    @model_validator(mode="after")
    def _tetrahedron(self) -> "CentralFiber":
        if (len(self.components), len(self.edges), len(self.vertices)) != (4, 6, 4):
            raise ValueError("The central fiber has 4 components, 6 edges and 4 vertices")
        if len(self.components) - len(self.edges) + len(self.vertices) != 2:
            raise ValueError("Euler characteristic of the tetrahedron boundary must be 2")
        for plane in self.components:
            if len(self.edges_of(plane)) != 3 or len(self.vertices_of(plane)) != 3:
                raise ValueError(f"Component {plane.value}=0 must touch 3 edges and 3 vertices")
        for edge in self.edges:
            if len(self.edge_vertices(edge)) != 2:
                raise ValueError(f"Edge {edge} must touch 2 vertices")
        return self

    @classmethod
    def standard(cls) -> "CentralFiber":
        vertices = tuple(
            tuple(c for c in COORDINATES if c != keep) for keep in COORDINATES
        )
        return cls(components=COORDINATES, edges=EDGES, vertices=vertices)

    def edges_of(self, plane: Coordinate) -> list[Edge]:
        return [e for e in self.edges if plane in e.vanishing]

    def vertices_of(self, plane: Coordinate) -> list[Vertex]:
        return [v for v in self.vertices if plane in v]

    def edge_components(self, edge: Edge) -> tuple[Coordinate, Coordinate]:
        return edge.vanishing

    def edge_vertices(self, edge: Edge) -> list[Vertex]:
        return [v for v in self.vertices if set(edge.vanishing) <= set(v)]

    def common_edge(self, first: Coordinate, second: Coordinate) -> Edge:
        if first == second:
            raise ValueError(f"Plane {first.value}=0 has no common edge with itself")
        return Edge.of(first, second)

    @staticmethod
    def vertex_point(vertex: Vertex) -> ProjectivePoint:
        return ProjectivePoint(coords=tuple(0 if c in vertex else 1 for c in COORDINATES))


class LineInPlane(BaseModel):
    """A line a*p + b*q + c*r = 0 inside the plane {plane = 0} with coordinates p < q < r."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    plane: Coordinate
    coefficients: tuple[Scalar, Scalar, Scalar]

    @field_validator("coefficients", mode="before")
    @classmethod
    def _coerce(cls, value: Sequence[ScalarLike]) -> tuple[Scalar, ...]:
        return tuple(to_scalar(v) for v in value)

    @model_validator(mode="after")
    def _nonzero(self) -> "LineInPlane":
        if not any(self.coefficients):
            raise ValueError("A line needs a nonzero linear form")
        return self

    @classmethod
    def of(cls, plane: "Coordinate | str", *values: ScalarLike) -> "LineInPlane":
        return cls(plane=Coordinate(plane), coefficients=tuple(values))

    @property
    def coordinates(self) -> tuple[Coordinate, Coordinate, Coordinate]:
        return plane_coordinates(self.plane)

    def coefficient(self, c: Coordinate) -> Scalar:
        if c == self.plane:
            return FIELD.zero
        return self.coefficients[self.coordinates.index(c)]

    def evaluate(self, point: ProjectivePoint) -> Scalar:
        total = FIELD.zero
        for a, c in zip(self.coefficients, self.coordinates):
            total = total + a * point[c]
        return total

    def contains(self, point: ProjectivePoint) -> bool:
        return not point[self.plane] and not self.evaluate(point)

    def same_line(self, other: "LineInPlane") -> bool:
        if self.plane != other.plane:
            return False
        a, b = self.coefficients, other.coefficients
        return all(a[i] * b[j] == a[j] * b[i] for i in range(3) for j in range(3))

    def __str__(self) -> str:
        terms = [
            f"({format_scalar(a)})*{c.value}" for a, c in zip(self.coefficients, self.coordinates) if a
        ]
        return f"{' + '.join(terms)} = 0, {self.plane.value} = 0"


class PrescribedPoint(BaseModel):
    """A prescribed singular point: the root [a:b] on an edge, meaning (s1, s2) = (a, b)."""

    model_config = ConfigDict(frozen=True)

    edge: Edge
    root: tuple[int, int]

    @property
    def point(self) -> ProjectivePoint:
        return self.edge.point(*self.root)

    @property
    def on_vertex(self) -> bool:
        return 0 in self.root


class DesignedQuartic(BaseModel):
    """A quartic realizing a prescribed singular set, with its edge scales."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    f: QuarticForm
    nullity: int
    scales: dict[str, Scalar]
    symmetric: bool = False


class EdgeLocus(BaseModel):
    """Singular points of the total space on one edge: the rational roots of f there."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    edge: Edge
    form: PolyElement
    roots: tuple[tuple[int, int], ...]

    @property
    def complete(self) -> bool:
        return len(self.roots) == 4

    def points(self) -> list[ProjectivePoint]:
        return [self.edge.point(a, b) for a, b in self.roots]


class SingularLocus(BaseModel):
    """Per-edge restricted quartics and their explicit rational singular points."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    edges: tuple[EdgeLocus, ...]

    @property
    def complete(self) -> bool:
        return all(locus.complete for locus in self.edges)

    @property
    def count(self) -> int:
        return sum(len(locus.roots) for locus in self.edges)

    def on(self, edge: Edge) -> EdgeLocus:
        return next(locus for locus in self.edges if locus.edge == edge)

    def points(self) -> list[ProjectivePoint]:
        return [p for locus in self.edges for p in locus.points()]

    def contains(self, point: ProjectivePoint) -> bool:
        return any(point.same_as(p) for p in self.points())
