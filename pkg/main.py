"""
Bipartite Games - Command Line Entry Point

Counts, enumerates, expands and canonicalizes simple games given by their
equivalence classes of players, and cross-checks the closed-form counts of
two-class games against a brute-force oracle.

Exit status: 0 on success, 1 on a verification mismatch, 2 on invalid input.
"""

import argparse
import contextlib
import json
import sys

import structlog
from pydantic import ValidationError

from api.commands import COMMANDS
from api.schemas import CliConfig
from core.dependencies import clear_settings, init_settings
from core.logging import GameEvents, configure_logging
from games.models import FormulaError, GameValidationError

log = structlog.get_logger(__name__)

EXIT_MISMATCH = 1
EXIT_INVALID = 2


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv", "text"], default="json")
    common.add_argument("--output", help="write the document here instead of stdout")
    common.add_argument("--workers", type=int, help="process pool width for the oracle")
    common.add_argument("--oracle-max-n", type=int, help="largest n the oracle may run")
    common.add_argument(
        "--allow-n6", action="store_true", help="permit the 7.8M-game oracle run at n=6"
    )

    parser = argparse.ArgumentParser(
        prog="bipartite-games",
        description="Simple games with two equivalence classes of players.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    count = sub.add_parser("count", parents=[common], help="closed-form count table")
    count.add_argument("--n-range", help="inclusive range A..B")
    count.add_argument("--n", type=int)
    count.add_argument("--by-r", action="store_true", help="split counts by r")

    enum = sub.add_parser("enumerate", parents=[common], help="canonical pairs as JSON lines")
    enum.add_argument("--n", type=int, required=True)

    for name, text in [
        ("expand", "VectorGame JSON to SimpleGame JSON"),
        ("canon", "SimpleGame JSON to canonical VectorGame JSON"),
        ("iso", "compare two SimpleGame JSON documents"),
    ]:
        command = sub.add_parser(name, parents=[common], help=text)
        command.add_argument("inputs", nargs="*", help="input files, '-' for stdin")

    oracle = sub.add_parser("oracle", parents=[common], help="brute-force classification")
    oracle.add_argument("--n", type=int, required=True)

    verify = sub.add_parser("verify", parents=[common], help="full cross-validation")
    verify.add_argument("--max-n", type=int)
    return parser


def parse_config(argv=None) -> CliConfig:
    """Parse arguments and merge them over the environment settings."""
    args = vars(build_parser().parse_args(argv))
    settings = init_settings()
    configure_logging(settings.LOG_LEVEL)
    if args.get("workers") is None:
        args["workers"] = settings.ORACLE_WORKERS
    if args.get("oracle_max_n") is None:
        args["oracle_max_n"] = settings.ORACLE_MAX_N
    args["allow_n6"] = bool(args.get("allow_n6") or settings.ALLOW_N6)
    return CliConfig(**{k: v for k, v in args.items() if v is not None})


def run(config: CliConfig, stdin=None, stdout=None) -> int:
    """Dispatch one subcommand and map failures to the exit-status contract."""
    stdin = stdin or sys.stdin
    handler = COMMANDS[config.subcommand]
    try:
        with contextlib.ExitStack() as stack:
            if config.output is not None:
                out = stack.enter_context(open(config.output, "w", encoding="utf-8"))
            else:
                out = stdout or sys.stdout
            return handler(config, stdin, out)
    except (GameValidationError, ValidationError, json.JSONDecodeError, OSError) as exc:
        log.warning(GameEvents.COMMAND_REJECTED, subcommand=config.subcommand, error=str(exc))
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except FormulaError as exc:
        log.error(GameEvents.COMMAND_FAILED, subcommand=config.subcommand, error=str(exc))
        print(f"mismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except Exception as exc:
        log.error(GameEvents.COMMAND_FAILED, subcommand=config.subcommand, error=str(exc))
        raise


def main(argv=None) -> int:
    try:
        try:
            config = parse_config(argv)
        except ValidationError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_INVALID
        return run(config)
    finally:
        clear_settings()


if __name__ == "__main__":
    sys.exit(main())
