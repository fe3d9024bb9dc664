"""JSON wire schemas for command inputs and outputs."""

from app.schemas.algebra import (
    HyperplaneSchema,
    LiftSeriesSchema,
    QuarticSchema,
    TermSchema,
    point_from_text,
    point_text,
)
from app.schemas.curve import CurveGraphSchema
from app.schemas.fiber import (
    DesignedQuarticSchema,
    PrescribedPointSchema,
    PrescriptionSchema,
    SingularLocusSchema,
)
from app.schemas.graft import RecipeSchema
from app.schemas.obstruction import DualObstructionSchema, ObstructionReportSchema
from app.schemas.verification import ClaimSchema, VerificationReportSchema

__all__ = [
    "ClaimSchema",
    "CurveGraphSchema",
    "DesignedQuarticSchema",
    "DualObstructionSchema",
    "HyperplaneSchema",
    "LiftSeriesSchema",
    "ObstructionReportSchema",
    "PrescribedPointSchema",
    "PrescriptionSchema",
    "QuarticSchema",
    "RecipeSchema",
    "SingularLocusSchema",
    "TermSchema",
    "VerificationReportSchema",
    "point_from_text",
    "point_text",
]
