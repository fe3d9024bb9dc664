"""verify: run the acceptance claims and report each one."""
import argparse

from app.commands.io import emit, load_quartic
from app.core.errors import ClaimFailure
from app.models.run import RunConfig
from app.schemas.verification import VerificationReportSchema
from app.services.verification.suite import run_suite

NAME = "verify"
HELP = "Check every claim on a designed or given quartic"
INPUTS = ("f",)


def add_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("f", type=str, nargs="?", help="Quartic JSON; designed from --seed when omitted")
    parser.add_argument("--symbolic", action="store_true", help="Also run the 35-monomial cancellation")


def handle(args: argparse.Namespace, config: RunConfig) -> int:
    f = load_quartic(config.inputs[0]) if config.inputs else None
    report = run_suite(
        f, seed=config.seed, trials=config.trials, symbolic=args.symbolic, order=config.order
    )
    emit(VerificationReportSchema.from_report(report).model_dump(), config.out)
    return 0 if report.passed else ClaimFailure.exit_code
