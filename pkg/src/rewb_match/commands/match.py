"""Command for matching one pattern against one subject."""

import logging
from typing import Any, Dict, List, Optional

from ..config import BRUTE_MAX_LENGTH
from ..errors import SubjectTooLongError
from ..matching.core import match_compiled
from ..matching.oracles import brute_force_match, cubic_match
from ..matching.query import compile_pattern
from ..symbols import as_text
from .models import Algorithm, MatchRow, StatsRow, WitnessRow

logger = logging.getLogger(__name__)


async def match_subject(
    pattern: str, subject: str, algo: Algorithm = "fast", alphabet: Optional[str] = None
) -> List[Dict[str, Any]]:
    """
    Decide whether ``subject`` (a symbol string) is in the language of ``pattern``.

    Returns:
        A single MatchRow; ``stats`` is set for fast and cubic, ``witness`` for brute.
    """
    if algo == "brute" and len(subject) > BRUTE_MAX_LENGTH:
        raise SubjectTooLongError(len(subject), BRUTE_MAX_LENGTH, algo)
    compiled = compile_pattern(pattern, alphabet)

    if algo == "brute":
        witness = brute_force_match(compiled, subject)
        row = MatchRow(
            pattern=pattern,
            subject_length=len(subject),
            algo=algo,
            matched=witness is not None,
            witness=(
                WitnessRow(beta=as_text(witness.beta), i=witness.i, j=witness.j)
                if witness
                else None
            ),
        )
    else:
        verdict = (match_compiled if algo == "fast" else cubic_match)(compiled, subject)
        row = MatchRow(
            pattern=pattern,
            subject_length=len(subject),
            algo=algo,
            matched=verdict.matched,
            stats=StatsRow.from_stats(verdict.stats),
        )
    logger.info(f"{algo} match on {len(subject)} symbols: matched={row.matched}")
    return [row.model_dump()]
