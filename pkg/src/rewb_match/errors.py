"""Exceptions raised by the rewb matcher."""

from typing import Optional


class RewbError(Exception):
    """Base class for every error the package raises on bad input."""


class PatternSyntaxError(RewbError, ValueError):
    """The pattern text does not follow the supported grammar."""

    def __init__(self, message: str, pattern: str, position: int):
        self.pattern = pattern
        self.position = position
        super().__init__(f"{message} at position {position}")


class RewbFormError(RewbError, ValueError):
    """The pattern is valid syntax but not of the form e0 (e) e1 \\1 e2."""

    def __init__(self, message: str, pattern: Optional[str] = None):
        self.pattern = pattern
        super().__init__(message)


class SubjectTooLongError(RewbError, ValueError):
    """The subject exceeds the length cap of the selected algorithm."""

    def __init__(self, length: int, cap: int, algo: str):
        self.length = length
        self.cap = cap
        super().__init__(f"--algo {algo} is limited to subjects of length {cap}, got {length}")
