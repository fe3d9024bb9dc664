"""Wire forms of obstruction reports and dual obstruction spaces."""

from pydantic import BaseModel

from app.core.scalars import format_scalar
from app.models.obstruction import DualObstruction, ObstructionReport
from app.schemas.algebra import ScalarText, point_text


class LineContributionSchema(BaseModel):
    component: str
    line: str
    value: ScalarText


class NodeContributionSchema(BaseModel):
    node: str
    point: list[ScalarText]
    lines: list[LineContributionSchema]
    value: ScalarText


class ObstructionReportSchema(BaseModel):
    hyperplane: str
    nodes: list[NodeContributionSchema]
    per_monomial: dict[str, ScalarText]
    total: ScalarText

    @classmethod
    def from_report(cls, report: ObstructionReport) -> "ObstructionReportSchema":
        return cls(
            hyperplane=report.hyperplane,
            nodes=[
                NodeContributionSchema(
                    node=n.node,
                    point=point_text(n.point),
                    lines=[
                        LineContributionSchema(
                            component=c.component, line=c.line, value=format_scalar(c.value)
                        )
                        for c in n.lines
                    ],
                    value=format_scalar(n.value),
                )
                for n in report.nodes
            ],
            per_monomial={k: format_scalar(v) for k, v in report.per_monomial.items()},
            total=format_scalar(report.total),
        )


class DualObstructionSchema(BaseModel):
    dimension: int
    rows: list[list[int]]
    basis: list[dict[str, ScalarText]]

    @classmethod
    def from_dual(cls, dual: DualObstruction) -> "DualObstructionSchema":
        return cls(
            dimension=dual.dimension,
            rows=[list(row) for row in dual.system.rows],
            basis=[{k: format_scalar(v) for k, v in b.items()} for b in dual.basis],
        )
