"""section: the degenerate hyperplane section cut by H on the central fiber."""
import argparse

from app.commands.io import emit, emit_dot, load_input, load_quartic
from app.models.run import RunConfig
from app.schemas.algebra import HyperplaneSchema
from app.schemas.curve import CurveGraphSchema
from app.services.curves.graph import genus
from app.services.curves.render import to_dot
from app.services.curves.section import hyperplane_section
from app.services.curves.validity import validate
from app.services.obstruction.residues import dual_obstruction_dim

NAME = "section"
HELP = "Build the hyperplane section of the central fiber"
INPUTS = ("hyperplane", "f")


def add_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("hyperplane", type=str, help="Hyperplane JSON")
    parser.add_argument("f", type=str, nargs="?", help="Quartic JSON; marks singular intersections")


def handle(args: argparse.Namespace, config: RunConfig) -> int:
    hyperplane = load_input(config.inputs[0], HyperplaneSchema).to_hyperplane()
    f = load_quartic(config.inputs[1]) if len(config.inputs) > 1 else None
    curve = hyperplane_section(hyperplane, f)
    report = validate(curve, f)
    payload = {
        "curve": CurveGraphSchema.from_curve(curve).model_dump(),
        "genus": genus(curve),
        "pre_log": report.pre_log,
        "pre_smoothable": report.pre_smoothable,
    }
    if report.pre_smoothable:
        payload["dual_dimension"] = dual_obstruction_dim(curve, f).dimension
    emit(payload, config.out)
    emit_dot(to_dot(curve, "section"), config.dot)
    return 0
