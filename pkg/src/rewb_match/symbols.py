"""Conversion of user text into the byte-wise symbol strings the engine matches."""

from typing import Union

Text = Union[str, bytes]


def as_bytes(text: Text) -> bytes:
    """UTF-8 bytes of ``text``; ``str`` taken from argv gets its original bytes back.

    Python decodes command-line arguments that are not valid UTF-8 with the
    ``surrogateescape`` handler, and encoding with the same handler undoes it.
    """
    if isinstance(text, bytes):
        return text
    return text.encode("utf-8", errors="surrogateescape")


def as_symbols(text: Text) -> str:
    """Return ``text`` as a string with exactly one character per byte.

    ``bytes`` are taken verbatim; ``str`` goes through ``as_bytes`` first.
    Latin-1 maps byte values 0-255 onto code points 0-255, so the result
    compares and sorts exactly like the underlying bytes.
    """
    return as_bytes(text).decode("latin-1")


def as_text(symbols: str) -> str:
    """Inverse of ``as_symbols`` for display; bytes that are not UTF-8 are escaped."""
    return symbols.encode("latin-1").decode("utf-8", errors="backslashreplace")
