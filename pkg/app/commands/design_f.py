"""design-f: a quartic realizing a prescribed singular set."""
import argparse
import logging

from app.commands.io import emit, load_input
from app.models.run import RunConfig
from app.schemas.fiber import DesignedQuarticSchema, PrescriptionSchema, SingularLocusSchema
from app.services.fiber.design import design_f
from app.services.fiber.locus import singular_locus

logger = logging.getLogger(__name__)

NAME = "design-f"
HELP = "Design f from 24 prescribed singular points"
INPUTS = ("prescription",)


def add_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("prescription", type=str, help="Prescription JSON ('-' for stdin)")
    parser.add_argument("--symmetric", action="store_true", help="Require permutation symmetry")


def handle(args: argparse.Namespace, config: RunConfig) -> int:
    prescription = load_input(config.inputs[0], PrescriptionSchema)
    design = design_f(prescription.to_points(), symmetric=args.symmetric or prescription.symmetric)
    locus = singular_locus(design.f)
    for edge in locus.edges:
        logger.info(f"Restriction to {edge.edge}: {edge.form.as_expr()} with roots {list(edge.roots)}")
    payload = DesignedQuarticSchema.from_design(design).model_dump()
    payload["singular_locus"] = SingularLocusSchema.from_locus(locus).model_dump()
    emit(payload, config.out)
    return 0
