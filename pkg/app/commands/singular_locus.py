"""singular-locus: the 24 singular points of the total space."""
import argparse

from app.commands.io import emit, load_quartic
from app.models.run import RunConfig
from app.schemas.fiber import SingularLocusSchema
from app.services.fiber.locus import singular_locus

NAME = "singular-locus"
HELP = "List the singular points of the total space on the edge lines"
INPUTS = ("f",)


def add_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("f", type=str, help="Quartic JSON")


def handle(args: argparse.Namespace, config: RunConfig) -> int:
    locus = singular_locus(load_quartic(config.inputs[0]))
    emit(SingularLocusSchema.from_locus(locus).model_dump(), config.out)
    return 0
