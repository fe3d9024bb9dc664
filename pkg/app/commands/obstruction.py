"""obstruction: the first-order obstruction of a hyperplane section."""
import argparse

from app.commands.io import emit, load_input, load_quartic
from app.core.errors import InputError
from app.models.run import RunConfig
from app.schemas.algebra import HyperplaneSchema
from app.schemas.obstruction import ObstructionReportSchema
from app.services.obstruction.pairing import first_order_obstruction, symbolic_cancellation

NAME = "obstruction"
HELP = "Pair first-order lifts of a section with the dual obstruction generator"
INPUTS = ("f",)


def add_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("f", type=str, nargs="?", help="Quartic JSON; omit with --symbolic")
    parser.add_argument("--hyperplane", type=str, help="Hyperplane JSON; defaults to alpha x + beta y + gamma z + w")
    parser.add_argument("--node", type=str, help="Report only this node, e.g. l^k")
    parser.add_argument("--symbolic", action="store_true", help="All 35 monomials with coefficient 1")


def handle(args: argparse.Namespace, config: RunConfig) -> int:
    hyperplane = load_input(args.hyperplane, HyperplaneSchema).to_hyperplane() if args.hyperplane else None
    if args.symbolic:
        report = symbolic_cancellation(hyperplane)
    elif config.inputs:
        report = first_order_obstruction(load_quartic(config.inputs[0]), hyperplane)
    else:
        raise InputError("obstruction needs a quartic or --symbolic")
    schema = ObstructionReportSchema.from_report(report)
    if args.node:
        matches = [n for n in schema.nodes if n.node == args.node]
        if not matches:
            raise InputError(f"No node {args.node}; nodes are {[n.node for n in schema.nodes]}")
        emit(matches[0].model_dump(), config.out)
    else:
        emit(schema.model_dump(), config.out)
    return 0
