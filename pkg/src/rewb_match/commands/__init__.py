"""One async function per command-line subcommand, each returning JSON-ready rows."""

from .bench import run_bench
from .check import run_check
from .match import match_subject
from .repeats import list_repeats

__all__ = ["list_repeats", "match_subject", "run_bench", "run_check"]
