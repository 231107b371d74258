"""Command for listing the right-maximal repeats of a subject."""

from typing import Any, Dict, List

from ..stringology.repeats import enum_right_maximal_repeats
from ..symbols import as_text
from .models import RepeatRow


async def list_repeats(subject: str) -> List[Dict[str, Any]]:
    """
    List the right-maximal repeats of ``subject`` in enumeration order.

    Returns:
        One RepeatRow per repeat with its length (as "len"), occurrences and overlap d.
    """
    return [
        RepeatRow(
            repeat=as_text(rec.repeat), length=rec.length, idx=list(rec.idx), d=rec.d
        ).model_dump(by_alias=True)
        for rec in enum_right_maximal_repeats(subject)
    ]
