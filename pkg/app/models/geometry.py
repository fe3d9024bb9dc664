"""Projective coordinates, points, edges and hyperplanes of P^3."""

import enum
from typing import Sequence

from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from app.core.scalars import FIELD, Scalar, ScalarLike, format_scalar, to_scalar


class Coordinate(str, enum.Enum):
    """Homogeneous coordinates of P^3, in their fixed order."""
    X = "x"
    Y = "y"
    Z = "z"
    W = "w"

    @property
    def index(self) -> int:
        return COORDINATES.index(self)


COORDINATES: tuple[Coordinate, ...] = (Coordinate.X, Coordinate.Y, Coordinate.Z, Coordinate.W)


def coordinate(value: "Coordinate | str") -> Coordinate:
    return value if isinstance(value, Coordinate) else Coordinate(value)


class ProjectivePoint(BaseModel):
    """A point [x:y:z:w] with exact coordinates."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    coords: tuple[Scalar, Scalar, Scalar, Scalar]

    @field_validator("coords", mode="before")
    @classmethod
    def _coerce(cls, value: Sequence[ScalarLike]) -> tuple[Scalar, ...]:
        return tuple(to_scalar(v) for v in value)

    @model_validator(mode="after")
    def _not_origin(self) -> "ProjectivePoint":
        if not any(self.coords):
            raise ValueError("[0:0:0:0] is not a projective point")
        return self

    @classmethod
    def of(cls, *values: ScalarLike) -> "ProjectivePoint":
        return cls(coords=tuple(values))

    def __getitem__(self, item: "Coordinate | str") -> Scalar:
        return self.coords[coordinate(item).index]

    def zero_coordinates(self) -> tuple[Coordinate, ...]:
        return tuple(c for c in COORDINATES if not self.coords[c.index])

    def normalized(self) -> tuple[Scalar, ...]:
        """Representative with the first nonzero coordinate equal to 1."""
        pivot = next(v for v in self.coords if v)
        return tuple(v / pivot for v in self.coords)

    def same_as(self, other: "ProjectivePoint") -> bool:
        return self.normalized() == other.normalized()

    def __str__(self) -> str:
        return "[" + ":".join(format_scalar(v) for v in self.coords) + "]"


class Edge(BaseModel):
    """An edge line of the central fiber, named by its two vanishing coordinates."""

    model_config = ConfigDict(frozen=True)

    vanishing: tuple[Coordinate, Coordinate]

    @field_validator("vanishing", mode="before")
    @classmethod
    def _sort(cls, value: Sequence["Coordinate | str"]) -> tuple[Coordinate, ...]:
        coords = sorted({coordinate(v) for v in value}, key=lambda c: c.index)
        if len(coords) != 2:
            raise ValueError(f"An edge needs two distinct vanishing coordinates, got {value}")
        return tuple(coords)

    @classmethod
    def of(cls, first: "Coordinate | str", second: "Coordinate | str") -> "Edge":
        return cls(vanishing=(first, second))

    @property
    def surviving(self) -> tuple[Coordinate, Coordinate]:
        first, second = (c for c in COORDINATES if c not in self.vanishing)
        return first, second

    @property
    def name(self) -> str:
        return "".join(c.value for c in self.vanishing)

    def contains(self, point: ProjectivePoint) -> bool:
        return all(not point[c] for c in self.vanishing)

    def point(self, first: ScalarLike, second: ScalarLike) -> ProjectivePoint:
        """The point with surviving coordinates (first, second)."""
        coords = [FIELD.zero] * 4
        s1, s2 = self.surviving
        coords[s1.index] = to_scalar(first)
        coords[s2.index] = to_scalar(second)
        return ProjectivePoint(coords=tuple(coords))

    def __str__(self) -> str:
        return "{" + ",".join(c.value for c in self.vanishing) + "}"


EDGES: tuple[Edge, ...] = tuple(
    Edge.of(a, b) for i, a in enumerate(COORDINATES) for b in COORDINATES[i + 1:]
)


def edge_of_point(point: ProjectivePoint) -> Edge:
    """The edge whose interior holds the point; vertices and off-edge points are rejected."""
    zeros = point.zero_coordinates()
    if len(zeros) != 2:
        raise ValueError(f"{point} is not in the interior of an edge line")
    return Edge(vanishing=zeros)


class Hyperplane(BaseModel):
    """The hyperplane ax + by + cz + dw = 0."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    coefficients: tuple[Scalar, Scalar, Scalar, Scalar]

    @field_validator("coefficients", mode="before")
    @classmethod
    def _coerce(cls, value: Sequence[ScalarLike]) -> tuple[Scalar, ...]:
        return tuple(to_scalar(v) for v in value)

    @model_validator(mode="after")
    def _nonzero(self) -> "Hyperplane":
        if not any(self.coefficients):
            raise ValueError("The zero form does not define a hyperplane")
        return self

    @classmethod
    def of(cls, *values: ScalarLike) -> "Hyperplane":
        return cls(coefficients=tuple(values))

    def __getitem__(self, item: "Coordinate | str") -> Scalar:
        return self.coefficients[coordinate(item).index]

    def evaluate(self, point: ProjectivePoint) -> Scalar:
        total = FIELD.zero
        for a, v in zip(self.coefficients, point.coords):
            total = total + a * v
        return total

    def contains(self, point: ProjectivePoint) -> bool:
        return not self.evaluate(point)

    def __add__(self, other: "Hyperplane") -> "Hyperplane":
        return Hyperplane(coefficients=tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def scale(self, factor: ScalarLike) -> "Hyperplane":
        k = to_scalar(factor)
        return Hyperplane(coefficients=tuple(k * a for a in self.coefficients))

    def __str__(self) -> str:
        terms = [f"({format_scalar(a)})*{c.value}" for a, c in zip(self.coefficients, COORDINATES) if a]
        return " + ".join(terms)
