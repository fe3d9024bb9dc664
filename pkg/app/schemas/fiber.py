"""Wire forms of prescriptions, singular loci and designed quartics."""

from pydantic import BaseModel

from app.core.errors import InputError
from app.core.scalars import format_scalar, integer_pair, parse_scalar
from app.models.fiber import DesignedQuartic, PrescribedPoint, SingularLocus
from app.models.geometry import Edge
from app.schemas.algebra import QuarticSchema, ScalarText


class PrescribedPointSchema(BaseModel):
    edge: tuple[str, str]
    root: tuple[ScalarText, ScalarText]

    def to_point(self) -> PrescribedPoint:
        try:
            edge = Edge(vanishing=self.edge)
        except ValueError as e:
            raise InputError(f"Invalid edge {list(self.edge)}: {e}")
        a, b = (parse_scalar(v) for v in self.root)
        if not a and not b:
            raise InputError(f"Root [0:0] on {edge} is not a point")
        return PrescribedPoint(edge=edge, root=integer_pair(a, b))

    @classmethod
    def from_point(cls, point: PrescribedPoint) -> "PrescribedPointSchema":
        return cls(
            edge=tuple(c.value for c in point.edge.vanishing),
            root=tuple(str(v) for v in point.root),
        )


class EdgeLocusSchema(BaseModel):
    edge: tuple[str, str]
    form: str
    roots: list[tuple[str, str]]
    complete: bool


class SingularLocusSchema(BaseModel):
    edges: list[EdgeLocusSchema]
    count: int
    complete: bool

    @classmethod
    def from_locus(cls, locus: SingularLocus) -> "SingularLocusSchema":
        return cls(
            edges=[
                EdgeLocusSchema(
                    edge=tuple(c.value for c in e.edge.vanishing),
                    form=str(e.form.as_expr()).replace("**", "^"),
                    roots=[(str(a), str(b)) for a, b in e.roots],
                    complete=e.complete,
                )
                for e in locus.edges
            ],
            count=locus.count,
            complete=locus.complete,
        )


class DesignedQuarticSchema(BaseModel):
    f: QuarticSchema
    nullity: int
    scales: dict[str, ScalarText]
    symmetric: bool

    @classmethod
    def from_design(cls, design: DesignedQuartic) -> "DesignedQuarticSchema":
        return cls(
            f=QuarticSchema.from_form(design.f),
            nullity=design.nullity,
            scales={k: format_scalar(v) for k, v in design.scales.items()},
            symmetric=design.symmetric,
        )


class PrescriptionSchema(BaseModel):
    """Input of design-f: four roots on each of the six edges."""

    points: list[PrescribedPointSchema]
    symmetric: bool = False

    def to_points(self) -> list[PrescribedPoint]:
        return [p.to_point() for p in self.points]
