"""Dual obstruction spaces, first-order obstructions and local lifts."""

from app.services.obstruction.lifts import (
    branch_chart,
    closed_form_lift,
    leading_lift_terms,
    lift_equation,
    local_lift_solve,
)
from app.services.obstruction.local_model import (
    local_model_lift,
    model_equation,
    model_residuals,
)
from app.services.obstruction.pairing import (
    first_order_obstruction,
    line_contribution,
    obstruction_along_family,
    symbolic_cancellation,
    symbolic_hyperplane,
)
from app.services.obstruction.residues import (
    dual_obstruction_dim,
    generator_restriction_compare,
    reference_character,
    residue_closure,
    residue_frame,
    residue_kernel,
    residue_sign,
    residue_system,
)

__all__ = [
    "branch_chart",
    "closed_form_lift",
    "dual_obstruction_dim",
    "first_order_obstruction",
    "generator_restriction_compare",
    "leading_lift_terms",
    "lift_equation",
    "local_lift_solve",
    "local_model_lift",
    "line_contribution",
    "model_equation",
    "model_residuals",
    "obstruction_along_family",
    "reference_character",
    "residue_closure",
    "residue_frame",
    "residue_kernel",
    "residue_sign",
    "residue_system",
    "symbolic_cancellation",
    "symbolic_hyperplane",
]
