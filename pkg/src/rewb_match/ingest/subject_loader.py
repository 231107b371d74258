"""Subject loading for the command line: inline text or a file read as raw bytes."""

import logging
from pathlib import Path
from typing import Optional

import aiofiles

from ..symbols import as_bytes, as_symbols

logger = logging.getLogger(__name__)


def trim_newlines(data: bytes) -> bytes:
    """Drop trailing CR/LF bytes; nothing else is touched."""
    return data.rstrip(b"\r\n")


async def read_subject_file(path: Path) -> bytes:
    """Read a subject file verbatim."""
    async with aiofiles.open(path, "rb") as f:
        data = await f.read()
    logger.info(f"Read {len(data)} bytes from {path}")
    return data


async def load_subject(
    inline: Optional[str] = None, path: Optional[Path] = None, trim: bool = False
) -> str:
    """Return the subject as a symbol string, one character per byte.

    Exactly one of ``inline`` and ``path`` is expected; the caller validates
    that. File contents are matched byte for byte unless ``trim`` is set.
    """
    if path is not None:
        data = await read_subject_file(path)
    else:
        data = as_bytes(inline or "")
    if trim:
        data = trim_newlines(data)
    return as_symbols(data)
