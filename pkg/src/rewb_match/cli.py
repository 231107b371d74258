"""Command-line front end for rewb-match."""

import argparse
import asyncio
import json
import logging
import sys
from typing import Any, Dict, List, Optional, Sequence

from pydantic import ValidationError

from .commands.bench import run_bench
from .commands.check import run_check
from .commands.match import match_subject
from .commands.models import CliConfig
from .commands.repeats import list_repeats
from .config import LOG_LEVEL, configure_logging
from .errors import RewbError
from .ingest.subject_loader import load_subject

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NO_MATCH = 1
EXIT_USAGE = 2

_STAT_KEYS = ("total_steps", "nfass_steps", "intmed_steps", "match3b_steps", "repeats")


class _ArgumentParser(argparse.ArgumentParser):
    """Raises instead of exiting so that ``run_cli`` owns every exit code."""

    def error(self, message: str) -> None:  # type: ignore[override]
        raise RewbError(f"usage: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="rewb-match",
        description="Match regular expressions with one backreference, e0(e)e1\\1e2.",
    )
    parser.add_argument("--log-level", default=LOG_LEVEL, help="logging level (stderr)")
    sub = parser.add_subparsers(dest="command", required=True)

    def subject_options(command: argparse.ArgumentParser) -> None:
        command.add_argument("--input", help="subject given inline")
        command.add_argument("--input-file", help="subject read from a file, byte for byte")
        command.add_argument("--trim", action="store_true", help="drop trailing newlines")

    def common_options(command: argparse.ArgumentParser) -> None:
        command.add_argument("--json", dest="json_output", action="store_true")

    match = sub.add_parser("match", help="decide one pattern against one subject")
    match.add_argument("--pattern", required=True)
    subject_options(match)
    match.add_argument("--algo", choices=["fast", "cubic", "brute"], default="fast")
    match.add_argument("--alphabet", help="characters `.` and negated classes range over")
    common_options(match)

    repeats = sub.add_parser("repeats", help="list right-maximal repeats of a subject")
    subject_options(repeats)
    common_options(repeats)

    check = sub.add_parser("check", help="cross-check fast, cubic and brute force")
    check.add_argument("--seed", type=int)
    check.add_argument("--instances", type=int)
    check.add_argument("--max-length", type=int)
    common_options(check)

    bench = sub.add_parser("bench", help="step counts over a family of subjects")
    bench.add_argument("--pattern", required=True)
    bench.add_argument("--family")
    bench.add_argument("--sizes")
    bench.add_argument("--algo", choices=["fast", "cubic"], default="fast")
    bench.add_argument("--alphabet")
    common_options(bench)
    return parser


def to_config(args: argparse.Namespace) -> CliConfig:
    """Build a CliConfig from parsed arguments, leaving unset options at their defaults."""
    options = {
        key: value
        for key, value in vars(args).items()
        if value is not None and key != "log_level"
    }
    return CliConfig(**options)


def _print_rows(rows: List[Dict[str, Any]], config: CliConfig) -> None:
    if config.json_output or config.command == "repeats":
        for row in rows:
            print(json.dumps(row))
        return
    for row in rows:
        if config.command == "bench":
            print(f"{row['n']}\t{row['steps']}\t{row['seconds']:.4f}")
        else:
            print("matched" if row["matched"] else "no match")
            if row.get("stats"):
                print(" ".join(f"{key}={row['stats'][key]}" for key in _STAT_KEYS))
            if row.get("witness"):
                witness = row["witness"]
                print(f"beta={witness['beta']!r} i={witness['i']} j={witness['j']}")


async def dispatch(config: CliConfig) -> int:
    if config.command == "check":
        report = await run_check(config.seed, config.instances, config.max_length)
        if config.json_output:
            print(json.dumps(report))
        else:
            print(f"{report['instances']} instances, {report['divergences']} divergences")
            if report["first_divergence"]:
                print(json.dumps(report["first_divergence"]))
        return EXIT_OK if report["divergences"] == 0 else EXIT_NO_MATCH

    if config.command == "bench":
        assert config.pattern is not None
        rows = await run_bench(
            config.pattern,
            config.sizes,
            config.family,
            "cubic" if config.algo == "cubic" else "fast",
            config.alphabet,
        )
        _print_rows(rows, config)
        return EXIT_OK

    subject = await load_subject(config.input, config.input_file, config.trim)
    if config.command == "repeats":
        _print_rows(await list_repeats(subject), config)
        return EXIT_OK

    assert config.pattern is not None
    rows = await match_subject(config.pattern, subject, config.algo, config.alphabet)
    _print_rows(rows, config)
    return EXIT_OK if rows[0]["matched"] else EXIT_NO_MATCH


def run_cli(argv: Optional[Sequence[str]] = None) -> int:
    """Parse ``argv``, run the subcommand and return the exit code."""
    try:
        args = build_parser().parse_args(argv)
        configure_logging(args.log_level.upper())
        config = to_config(args)
        return asyncio.run(dispatch(config))
    except ValidationError as e:
        logger.error(f"Invalid options: {e}")
        print(f"rewb-match: {e}", file=sys.stderr)
    except RewbError as e:
        logger.error(f"{type(e).__name__}: {e}")
        print(f"rewb-match: {e}", file=sys.stderr)
    except UnicodeError as e:
        logger.error(f"Cannot encode argument: {e}")
        print(f"rewb-match: {e}", file=sys.stderr)
    except OSError as e:
        logger.error(f"Cannot read input: {e}")
        print(f"rewb-match: {e}", file=sys.stderr)
    return EXIT_USAGE


def main() -> None:
    """Entry point for CLI usage via pyproject.toml scripts."""
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
