"""
Degenerate curves in the central fiber as decorated dual graphs.

Components are lines in the coordinate planes, node-edges are intersection
points where two branches are glued, and S-marks are smooth points of the
domain mapped to singular points of the total space.
"""
import enum
from typing import Optional, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator

from app.models.fiber import LineInPlane
from app.models.geometry import Coordinate, ProjectivePoint

MetadataValue = Union[str, int]


class Component(BaseModel):
    model_config = ConfigDict(frozen=True)

    id: str
    plane: Coordinate
    line: LineInPlane
    multiplicity: int = 1

    @model_validator(mode="after")
    def _line_in_plane(self) -> "Component":
        if self.line.plane != self.plane:
            raise ValueError(
                f"Component {self.id}: line lies in {self.line.plane.value}=0, not {self.plane.value}=0"
            )
        if self.multiplicity < 1:
            raise ValueError(f"Component {self.id}: multiplicity must be positive")
        return self


class NodeEdge(BaseModel):
    """A node of the domain: two branches on the end components glued over ``point``."""

    model_config = ConfigDict(frozen=True)

    id: str
    ends: tuple[str, str]
    point: ProjectivePoint
    weights: tuple[int, int] = (1, 1)


class SMark(BaseModel):
    """A smooth domain point on ``component`` mapped to a singular point of the total space."""

    model_config = ConfigDict(frozen=True)

    id: str
    component: str
    point: ProjectivePoint
    weight: int = 1
    partner: Optional[str] = None


class CurveGraph(BaseModel):
    """
    Dual graph of a degenerate stable map to the central fiber.

    Construction rejects dangling references, nodes whose image misses one
    of the end lines, marks off their line and asymmetric partner pairs.
    Connectivity and the finer validity conditions are checked by the
    curve services.
    """

    model_config = ConfigDict(frozen=True)

    components: tuple[Component, ...]
    nodes: tuple[NodeEdge, ...] = ()
    marks: tuple[SMark, ...] = ()
    metadata: dict[str, MetadataValue] = Field(default_factory=dict)

    @model_validator(mode="after")
    def _well_formed(self) -> "CurveGraph":
        ids = [c.id for c in self.components] + [n.id for n in self.nodes] + [m.id for m in self.marks]
        duplicates = {i for i in ids if ids.count(i) > 1}
        if duplicates:
            raise ValueError(f"Duplicate ids in curve: {sorted(duplicates)}")
        lines = {c.id: c.line for c in self.components}
        for node in self.nodes:
            for end in node.ends:
                if end not in lines:
                    raise ValueError(f"Node {node.id} references unknown component {end}")
                if not lines[end].contains(node.point):
                    raise ValueError(f"Node {node.id} at {node.point} is not on the line of {end}")
            if node.ends[0] == node.ends[1]:
                raise ValueError(f"Node {node.id} joins {node.ends[0]} to itself")
        marks = {m.id: m for m in self.marks}
        for mark in self.marks:
            if mark.component not in lines:
                raise ValueError(f"Mark {mark.id} references unknown component {mark.component}")
            if not lines[mark.component].contains(mark.point):
                raise ValueError(f"Mark {mark.id} at {mark.point} is not on the line of {mark.component}")
            if mark.partner is not None:
                partner = marks.get(mark.partner)
                if partner is None or partner.partner != mark.id:
                    raise ValueError(f"Mark {mark.id} has no symmetric partner {mark.partner}")
                if not partner.point.same_as(mark.point):
                    raise ValueError(f"Partnered marks {mark.id}, {partner.id} map to different points")
        return self

    def component(self, component_id: str) -> Component:
        for c in self.components:
            if c.id == component_id:
                return c
        raise KeyError(component_id)

    def node(self, node_id: str) -> NodeEdge:
        for n in self.nodes:
            if n.id == node_id:
                return n
        raise KeyError(node_id)

    def mark(self, mark_id: str) -> SMark:
        for m in self.marks:
            if m.id == mark_id:
                return m
        raise KeyError(mark_id)

    def nodes_at(self, component_id: str) -> list[NodeEdge]:
        return [n for n in self.nodes if component_id in n.ends]

    def marks_at(self, component_id: str) -> list[SMark]:
        return [m for m in self.marks if m.component == component_id]

    def partner_pairs(self) -> list[tuple[SMark, SMark]]:
        pairs = []
        for m in self.marks:
            if m.partner is not None and m.id < m.partner:
                pairs.append((m, self.mark(m.partner)))
        return pairs

    @property
    def degree(self) -> int:
        return sum(c.multiplicity for c in self.components)

    def with_metadata(self, **values: MetadataValue) -> "CurveGraph":
        return self.model_copy(update={"metadata": {**self.metadata, **values}})


class ViolationKind(str, enum.Enum):
    NOT_TRANSVERSE = "not_torically_transverse"
    SAME_PLANE = "node_in_one_plane"
    NODE_OFF_EDGE = "node_off_edge_line"
    EDGE_POINT_UNGLUED = "edge_point_not_node"
    WEIGHT_MISMATCH = "weight_mismatch"
    MARK_OFF_LINE = "mark_off_line"
    MARK_NOT_SINGULAR = "mark_not_singular"
    MARK_NOT_SMOOTH = "mark_not_smooth_point"
    HIGHER_MULTIPLICITY = "higher_multiplicity"


class Violation(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: ViolationKind
    location: str
    detail: str = ""


class ValidityReport(BaseModel):
    """Validity flags from torically transverse up to simply pre-smoothable."""

    model_config = ConfigDict(frozen=True)

    torically_transverse: bool
    pre_log: bool
    pre_smoothable: bool
    simply_pre_smoothable: bool
    violations: tuple[Violation, ...] = ()

    @model_validator(mode="after")
    def _monotone(self) -> "ValidityReport":
        if self.simply_pre_smoothable and not self.pre_smoothable:
            raise ValueError("simply pre-smoothable implies pre-smoothable")
        if self.pre_smoothable and not self.pre_log:
            raise ValueError("pre-smoothable implies pre-log")
        if self.pre_log and not self.torically_transverse:
            raise ValueError("pre-log implies torically transverse")
        return self

    def kinds(self) -> set[ViolationKind]:
        return {v.kind for v in self.violations}
