"""
Quartic degeneration engine
Command-line entry point
"""
import argparse
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from pydantic import ValidationError

from app.commands import COMMANDS
from app.commands.io import dump_json
from app.core.config import settings
from app.core.errors import DegenerationError, InputError
from app.models.run import RunConfig

logger = logging.getLogger(__name__)


def configure_logging(verbose: bool = False) -> None:
    """Logs go to stderr; stdout carries JSON only."""
    logging.basicConfig(
        level=logging.DEBUG if verbose else getattr(logging, settings.LOG_LEVEL),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
        force=True,
    )


class CommandParser(argparse.ArgumentParser):
    """Usage errors exit with the input-error code."""

    def error(self, message: str):
        raise InputError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=settings.DEFAULT_SEED, help="Seed of all randomized trials")
    common.add_argument("--trials", type=int, default=settings.DEFAULT_TRIALS, help="Randomized trials per claim")
    common.add_argument("--order", type=int, default=settings.LIFT_ORDER, help="Series truncation")
    common.add_argument("--out", type=Path, default=None, help="Write JSON here instead of stdout")
    common.add_argument("--dot", type=Path, default=None, help="Write the dual graph as DOT")
    common.add_argument("-v", "--verbose", action="store_true", help="Debug logging")

    parser = CommandParser(
        prog="quartic-degeneration",
        description="Exact computations on the degeneration xyzw + t f = 0 of a quartic K3 surface",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    for name, module in COMMANDS.items():
        sub = subparsers.add_parser(name, help=module.HELP, parents=[common])
        module.add_arguments(sub)
    return parser


def run_config(args: argparse.Namespace) -> RunConfig:
    module = COMMANDS[args.command]
    inputs = tuple(Path(value) for value in (getattr(args, n, None) for n in module.INPUTS) if value)
    try:
        return RunConfig(
            command=args.command,
            inputs=inputs,
            out=args.out,
            dot=args.dot,
            seed=args.seed,
            trials=args.trials,
            order=args.order,
            verbose=args.verbose,
        )
    except ValidationError as e:
        raise InputError(f"Invalid options: {e.errors()[0]['msg']}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Parse arguments, run one command and map failures to exit codes.

    Returns:
        0 on success, 1 for unusable input, 2 for violated preconditions,
        3 for failed claims
    """
    configure_logging()
    try:
        args = build_parser().parse_args(argv)
        if args.verbose:
            configure_logging(verbose=True)
        config = run_config(args)
        logger.info(f"Running {config.command} with seed {config.seed}")
        return COMMANDS[config.command].handle(args, config)
    except DegenerationError as e:
        logger.error(f"{type(e).__name__}: {e.message}")
        sys.stderr.write(dump_json(e.to_dict()))
        return e.exit_code
    except ValueError as e:
        logger.error(f"Invalid input: {e}")
        return 1
    except Exception as e:
        logger.error(f"Unhandled exception: {e}", exc_info=True)
        return 1


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
