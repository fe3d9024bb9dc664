"""Residue frames, the dual obstruction space and obstruction reports."""

from pydantic import BaseModel, ConfigDict, Field, model_validator

from app.core.scalars import FIELD, Scalar, scalar_sum
from app.models.algebra import LiftSeries
from app.models.fiber import plane_coordinates
from app.models.geometry import COORDINATES, Coordinate, ProjectivePoint

Character = tuple[int, int, int, int]


class PlaneResidueFrame(BaseModel):
    """
    Toric frame of one coordinate plane, lifted to the lattices of P^3.

    The rays e_c are the unit vectors of the three surviving coordinates
    (their sum is zero in the quotient by (1, 1, 1, 1)). The covector f_c is
    e*_{c''} - e*_{c'} where c' and c'' follow c cyclically in the plane.
    """

    model_config = ConfigDict(frozen=True)

    plane: Coordinate
    rays: dict[Coordinate, Character]
    covectors: dict[Coordinate, Character]

    @model_validator(mode="after")
    def _frame(self) -> "PlaneResidueFrame":
        coords = plane_coordinates(self.plane)
        if set(self.rays) != set(coords) or set(self.covectors) != set(coords):
            raise ValueError(f"Frame of {self.plane.value}=0 must be indexed by {coords}")
        for c in coords:
            if self.pair(c, c) != 0:
                raise ValueError(f"f_{c.value} does not annihilate e_{c.value}")
        total = [sum(f[i] for f in self.covectors.values()) for i in range(4)]
        if any(total):
            raise ValueError("Covectors of a frame must sum to zero")
        return self

    @classmethod
    def of(cls, plane: "Coordinate | str") -> "PlaneResidueFrame":
        plane = Coordinate(plane)
        coords = plane_coordinates(plane)

        def unit(c: Coordinate) -> Character:
            return tuple(1 if d == c else 0 for d in COORDINATES)

        covectors = {}
        for i, c in enumerate(coords):
            after, later = coords[(i + 1) % 3], coords[(i + 2) % 3]
            covectors[c] = tuple(u - v for u, v in zip(unit(later), unit(after)))
        return cls(plane=plane, rays={c: unit(c) for c in coords}, covectors=covectors)

    def pair(self, covector: Coordinate, ray: Coordinate) -> int:
        return sum(a * b for a, b in zip(self.covectors[covector], self.rays[ray]))

    def residues(self, c: Scalar) -> dict[Coordinate, tuple[Scalar, ...]]:
        """Residues of the form with scalar c at the three boundary lines of the plane."""
        return {k: tuple(c * v for v in f) for k, f in self.covectors.items()}


class ResidueSystem(BaseModel):
    """One unknown per component, one +-1 row per node-edge."""

    model_config = ConfigDict(frozen=True)

    components: tuple[str, ...]
    nodes: tuple[str, ...]
    rows: tuple[tuple[int, ...], ...]

    @model_validator(mode="after")
    def _shape(self) -> "ResidueSystem":
        if len(self.rows) != len(self.nodes):
            raise ValueError("One residue constraint per node-edge")
        for row in self.rows:
            if len(row) != len(self.components) or any(v not in (-1, 0, 1) for v in row):
                raise ValueError(f"Residue row {row} is malformed")
        return self


class DualObstruction(BaseModel):
    """Kernel of the residue system; each basis element assigns a scalar to every component."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    system: ResidueSystem
    basis: tuple[dict[str, Scalar], ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def generator(self) -> dict[str, Scalar]:
        if self.dimension != 1:
            raise ValueError(f"Dual obstruction space has dimension {self.dimension}, not 1")
        return self.basis[0]


class LineContribution(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    component: str
    line: str
    value: Scalar


class NodeContribution(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    node: str
    point: ProjectivePoint
    lines: tuple[LineContribution, ...]
    value: Scalar

    @model_validator(mode="after")
    def _sum(self) -> "NodeContribution":
        if scalar_sum(c.value for c in self.lines) != self.value:
            raise ValueError(f"Node {self.node}: value is not the sum of its line contributions")
        return self


class ObstructionReport(BaseModel):
    """First-order obstruction of a hyperplane section, node by node and monomial by monomial."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    hyperplane: str
    nodes: tuple[NodeContribution, ...]
    per_monomial: dict[str, Scalar] = Field(default_factory=dict)
    total: Scalar = FIELD.zero

    @model_validator(mode="after")
    def _totals(self) -> "ObstructionReport":
        if scalar_sum(n.value for n in self.nodes) != self.total:
            raise ValueError("Total is not the sum of the node contributions")
        if scalar_sum(self.per_monomial.values()) != self.total:
            raise ValueError("Total is not the sum of the per-monomial totals")
        return self

    def node(self, node_id: str) -> NodeContribution:
        return next(n for n in self.nodes if n.node == node_id)

    @property
    def vanishes(self) -> bool:
        return not self.total


class LocalModelLift(BaseModel):
    """Lifts of both branches of the node XY + tZ = 0 sharing the constant r0."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    first: LiftSeries
    second: LiftSeries
    r0: Scalar

    @property
    def smoothes_node(self) -> bool:
        return bool(self.r0)


class BranchChart(BaseModel):
    """
    A line through a node image, seen in the chart of the node.

    The branch is Y_first = anchor + slope*u, Y_param = u, Y_plane = 0, where
    ``plane`` is the coordinate vanishing on the line's plane and ``param`` the
    other coordinate vanishing at the node.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    pivot: Coordinate
    first: Coordinate
    param: Coordinate
    plane: Coordinate
    anchor: Scalar
    slope: Scalar
    transverse: Scalar

    def name(self, c: Coordinate) -> str:
        return f"{c.value}_{self.pivot.value}"
