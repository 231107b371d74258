"""Command that cross-checks the fast matcher against the cubic baseline and brute force."""

import asyncio
import logging
from typing import Any, Dict, List, Optional, Tuple

from ..config import BRUTE_MAX_LENGTH, CHECK_WORKERS
from ..errors import SubjectTooLongError
from ..matching.core import match_compiled
from ..matching.corpus import BINARY_ALPHABET, CORPUS, batches, random_instances
from ..matching.oracles import brute_force_match, cubic_match
from ..matching.query import CompiledQuery, compile_pattern
from ..syntax.printer import print_rewb
from .models import CheckReport, Divergence, WitnessRow

logger = logging.getLogger(__name__)

Instance = Tuple[int, str, str]


def check_instance(
    compiled: CompiledQuery, number: int, pattern: str, subject: str
) -> Optional[Divergence]:
    """Run all three deciders on one instance; return the disagreement, if any."""
    fast = match_compiled(compiled, subject).matched
    cubic = cubic_match(compiled, subject).matched
    witness = brute_force_match(compiled, subject)
    witness_valid = witness.validate(compiled, subject) if witness else None
    brute = witness is not None
    if fast == cubic == brute and witness_valid is not False:
        return None
    return Divergence(
        number=number,
        pattern=pattern,
        canonical=print_rewb(compiled.query),
        subject=subject,
        fast=fast,
        cubic=cubic,
        brute=brute,
        witness=WitnessRow(beta=witness.beta, i=witness.i, j=witness.j) if witness else None,
        witness_valid=witness_valid,
    )


def check_batch(batch: List[Instance], alphabet: str) -> List[Divergence]:
    compiled: Dict[str, CompiledQuery] = {}
    divergences = []
    for number, pattern, subject in batch:
        if pattern not in compiled:
            compiled[pattern] = compile_pattern(pattern, alphabet)
        divergence = check_instance(compiled[pattern], number, pattern, subject)
        if divergence is not None:
            logger.warning(
                f"Instance {number} diverges: {pattern!r} on {subject!r} "
                f"fast={divergence.fast} cubic={divergence.cubic} brute={divergence.brute}"
            )
            divergences.append(divergence)
    return divergences


async def run_check(
    seed: int,
    instances: int,
    max_length: int,
    patterns: Tuple[str, ...] = CORPUS,
    alphabet: str = BINARY_ALPHABET,
    workers: int = CHECK_WORKERS,
) -> Dict[str, Any]:
    """
    Run the three-way agreement suite on seeded random instances.

    Returns:
        A CheckReport with the divergence count and the first divergence by
        instance number, which carries everything needed to reproduce it.
    """
    if max_length > BRUTE_MAX_LENGTH:
        raise SubjectTooLongError(max_length, BRUTE_MAX_LENGTH, "brute")
    items = list(random_instances(seed, instances, max_length, patterns))
    results = await asyncio.gather(
        *(asyncio.to_thread(check_batch, batch, alphabet) for batch in batches(items, workers))
    )
    divergences = sorted((d for result in results for d in result), key=lambda d: d.number)
    report = CheckReport(
        seed=seed,
        instances=instances,
        patterns=len(patterns),
        max_length=max_length,
        divergences=len(divergences),
        first_divergence=divergences[0] if divergences else None,
    )
    logger.info(
        f"Checked {instances} instances over {len(patterns)} patterns: "
        f"{len(divergences)} divergences"
    )
    return report.model_dump()
