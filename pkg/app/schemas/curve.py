"""Wire form of degenerate curves."""

from typing import Optional, Union

from pydantic import BaseModel, Field

from app.core.errors import InputError
from app.core.scalars import format_scalar, parse_scalar
from app.models.curve import Component, CurveGraph, NodeEdge, SMark
from app.models.fiber import LineInPlane
from app.schemas.algebra import ScalarText, point_from_text, point_text


class ComponentSchema(BaseModel):
    id: str
    plane: str
    line: tuple[ScalarText, ScalarText, ScalarText]
    multiplicity: int = 1


class NodeEdgeSchema(BaseModel):
    id: str
    ends: tuple[str, str]
    point: list[ScalarText]
    weights: tuple[int, int] = (1, 1)


class SMarkSchema(BaseModel):
    id: str
    component: str
    point: list[ScalarText]
    weight: int = 1
    partner: Optional[str] = None


class CurveGraphSchema(BaseModel):
    components: list[ComponentSchema]
    nodes: list[NodeEdgeSchema] = Field(default_factory=list)
    marks: list[SMarkSchema] = Field(default_factory=list)
    metadata: dict[str, Union[int, str]] = Field(default_factory=dict)

    @classmethod
    def from_curve(cls, curve: CurveGraph) -> "CurveGraphSchema":
        return cls(
            components=[
                ComponentSchema(
                    id=c.id,
                    plane=c.plane.value,
                    line=tuple(format_scalar(a) for a in c.line.coefficients),
                    multiplicity=c.multiplicity,
                )
                for c in curve.components
            ],
            nodes=[
                NodeEdgeSchema(id=n.id, ends=n.ends, point=point_text(n.point), weights=n.weights)
                for n in curve.nodes
            ],
            marks=[
                SMarkSchema(
                    id=m.id, component=m.component, point=point_text(m.point),
                    weight=m.weight, partner=m.partner,
                )
                for m in curve.marks
            ],
            metadata=dict(curve.metadata),
        )

    def to_curve(self) -> CurveGraph:
        try:
            return CurveGraph(
                components=tuple(
                    Component(
                        id=c.id,
                        plane=c.plane,
                        line=LineInPlane.of(c.plane, *(parse_scalar(a) for a in c.line)),
                        multiplicity=c.multiplicity,
                    )
                    for c in self.components
                ),
                nodes=tuple(
                    NodeEdge(id=n.id, ends=n.ends, point=point_from_text(n.point), weights=n.weights)
                    for n in self.nodes
                ),
                marks=tuple(
                    SMark(
                        id=m.id, component=m.component, point=point_from_text(m.point),
                        weight=m.weight, partner=m.partner,
                    )
                    for m in self.marks
                ),
                metadata=dict(self.metadata),
            )
        except ValueError as e:
            raise InputError(f"Malformed curve: {e}")
