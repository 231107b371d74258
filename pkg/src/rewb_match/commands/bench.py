"""Command that measures Δ-step counts of the fast matcher or the cubic baseline by size."""

import asyncio
import logging
import time
from typing import Any, Dict, List, Literal, Optional, Sequence

from ..matching.core import match_compiled
from ..matching.corpus import family_subject
from ..matching.oracles import cubic_match
from ..matching.query import compile_pattern
from ..symbols import as_symbols
from .models import BenchRow

logger = logging.getLogger(__name__)


def bench_size(
    pattern: str, family: str, n: int, algo: Literal["fast", "cubic"], alphabet: Optional[str]
) -> BenchRow:
    compiled = compile_pattern(pattern, alphabet)
    subject = family_subject(as_symbols(family), n)
    decide = match_compiled if algo == "fast" else cubic_match
    started = time.perf_counter()
    verdict = decide(compiled, subject, exhaustive=True)
    seconds = time.perf_counter() - started
    return BenchRow(
        n=n,
        algo=algo,
        family=family,
        steps=verdict.stats.total_steps,
        repeats=verdict.stats.repeats,
        seconds=seconds,
    )


async def run_bench(
    pattern: str,
    sizes: Sequence[int],
    family: str,
    algo: Literal["fast", "cubic"] = "fast",
    alphabet: Optional[str] = None,
) -> List[Dict[str, Any]]:
    """
    Run the matcher on ``family`` cut to each size, examining every repeat.

    Returns:
        One BenchRow per size, in size order.
    """
    rows = await asyncio.gather(
        *(asyncio.to_thread(bench_size, pattern, family, n, algo, alphabet) for n in sizes)
    )
    for earlier, later in zip(rows, rows[1:]):
        if earlier.steps:
            logger.info(f"steps({later.n})/steps({earlier.n}) = {later.steps / earlier.steps:.2f}")
    return [row.model_dump() for row in rows]
