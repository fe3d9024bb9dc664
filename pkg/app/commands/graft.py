"""graft: assemble a rational or genus-r graft from a recipe."""
import argparse
import logging

from app.commands.io import emit, emit_dot, load_input
from app.models.graft import GraftKind
from app.models.run import RunConfig
from app.schemas.curve import CurveGraphSchema
from app.schemas.graft import RecipeSchema
from app.services.curves.graph import genus
from app.services.curves.render import to_dot
from app.services.curves.validity import validate
from app.services.graft.assemble import graft_genus, graft_rational
from app.services.obstruction.residues import dual_obstruction_dim

logger = logging.getLogger(__name__)

NAME = "graft"
HELP = "Graft an auxiliary curve onto a degree-4 rational curve"
INPUTS = ("recipe",)


def add_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("recipe", type=str, help="Recipe JSON")
    parser.add_argument("--r", type=int, default=None, help="Covering degree or genus; overrides the recipe")


def handle(args: argparse.Namespace, config: RunConfig) -> int:
    recipe = load_input(config.inputs[0], RecipeSchema).build(args.r)
    curve = graft_rational(recipe) if recipe.kind == GraftKind.RATIONAL else graft_genus(recipe)
    report = validate(curve, recipe.f)
    payload = {
        "curve": CurveGraphSchema.from_curve(curve).model_dump(),
        "genus": genus(curve),
        "simply_pre_smoothable": report.simply_pre_smoothable,
        "dual_dimension": dual_obstruction_dim(curve, recipe.f).dimension,
    }
    logger.info(f"Graft {recipe.kind.value} r={recipe.r}: {len(curve.components)} components, genus {payload['genus']}")
    emit(payload, config.out)
    emit_dot(to_dot(curve, f"{recipe.kind.value}_r{recipe.r}"), config.dot)
    return 0
