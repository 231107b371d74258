"""Runtime configuration for rewb-match.

Values are read once from the environment at import time; the CLI can override
the alphabet per invocation with ``--alphabet``.
"""

import logging
import os
import string

# Characters `.` and negated classes range over unless a query declares its own.
DEFAULT_ALPHABET = os.environ.get("REWB_ALPHABET") or string.printable

# The brute-force oracle enumerates every split of the subject, so cap it.
BRUTE_MAX_LENGTH = int(os.environ.get("REWB_BRUTE_MAX_LENGTH", "16"))

LOG_LEVEL = os.environ.get("REWB_LOG_LEVEL", "WARNING").upper()
LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

# Default schedule for `bench` and the seed word its family repeats.
DEFAULT_BENCH_SIZES = (60, 120, 240, 480)
DEFAULT_BENCH_FAMILY = "abb"

# `check` defaults: instances drawn across the whole corpus and the longest subject.
DEFAULT_CHECK_SEED = 20240501
DEFAULT_CHECK_INSTANCES = 5000
DEFAULT_CHECK_MAX_LENGTH = 12
CHECK_WORKERS = 4


def configure_logging(level: str = LOG_LEVEL) -> None:
    """Configure root logging for command-line use (stderr, one format)."""
    logging.basicConfig(level=getattr(logging, level, logging.WARNING), format=LOG_FORMAT)
