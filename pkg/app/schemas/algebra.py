"""Wire forms of scalars, points, hyperplanes, quartics and lift series."""

from typing import Optional

from pydantic import BaseModel, Field, model_validator

from app.core.errors import InputError
from app.core.scalars import Scalar, format_scalar, parse_scalar
from app.models.algebra import LiftSeries, QuarticForm, quartic_monomials
from app.models.geometry import Hyperplane, ProjectivePoint
from app.services.algebra.polynomials import quartic_from_expression

ScalarText = str


def scalar_text(value: Scalar) -> ScalarText:
    return format_scalar(value)


def point_text(point: ProjectivePoint) -> list[ScalarText]:
    return [format_scalar(v) for v in point.coords]


def point_from_text(values: list[ScalarText]) -> ProjectivePoint:
    if len(values) != 4:
        raise InputError(f"A point of P^3 needs 4 coordinates, got {len(values)}")
    try:
        return ProjectivePoint(coords=tuple(parse_scalar(v) for v in values))
    except ValueError as e:
        raise InputError(f"Invalid point {values}: {e}")


class TermSchema(BaseModel):
    monomial: tuple[int, int, int, int]
    coefficient: ScalarText


class QuarticSchema(BaseModel):
    """A quartic as explicit terms or as one expression in x, y, z, w."""

    terms: list[TermSchema] = Field(default_factory=list)
    expression: Optional[str] = None

    @model_validator(mode="after")
    def _one_source(self) -> "QuarticSchema":
        if self.terms and self.expression:
            raise ValueError("Give either terms or an expression, not both")
        return self

    @classmethod
    def from_form(cls, f: QuarticForm) -> "QuarticSchema":
        return cls(
            terms=[
                TermSchema(monomial=exp, coefficient=format_scalar(coeff))
                for exp, coeff in f.terms()
            ]
        )

    def to_form(self) -> QuarticForm:
        if self.expression is not None:
            return quartic_from_expression(self.expression)
        valid = set(quartic_monomials())
        terms = {}
        for term in self.terms:
            if term.monomial not in valid:
                raise InputError(f"{list(term.monomial)} is not a quartic monomial")
            terms[term.monomial] = parse_scalar(term.coefficient)
        return QuarticForm.from_terms(terms)


class HyperplaneSchema(BaseModel):
    coefficients: tuple[ScalarText, ScalarText, ScalarText, ScalarText]

    @classmethod
    def from_hyperplane(cls, hyperplane: Hyperplane) -> "HyperplaneSchema":
        return cls(coefficients=tuple(format_scalar(a) for a in hyperplane.coefficients))

    def to_hyperplane(self) -> Hyperplane:
        try:
            return Hyperplane(coefficients=tuple(parse_scalar(a) for a in self.coefficients))
        except ValueError as e:
            raise InputError(f"Invalid hyperplane {list(self.coefficients)}: {e}")


class SeriesTermSchema(BaseModel):
    pole: ScalarText
    regular: list[ScalarText]


class LiftSeriesSchema(BaseModel):
    parameter: str
    order: int
    coordinates: dict[str, list[SeriesTermSchema]]

    @classmethod
    def from_lift(cls, lift: LiftSeries) -> "LiftSeriesSchema":
        return cls(
            parameter=lift.parameter,
            order=lift.order,
            coordinates={
                name: [
                    SeriesTermSchema(
                        pole=format_scalar(term.pole),
                        regular=[format_scalar(v) for v in term.regular],
                    )
                    for term in terms
                ]
                for name, terms in lift.coordinates.items()
            },
        )
