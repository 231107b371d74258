"""rewb-match - quadratic-time matching of regular expressions with one backreference."""

from .errors import PatternSyntaxError, RewbError, RewbFormError
from .matching import MatchStats, MatchVerdict, has_square, match

__version__ = "0.1.0"

__all__ = [
    "MatchStats",
    "MatchVerdict",
    "PatternSyntaxError",
    "RewbError",
    "RewbFormError",
    "has_square",
    "match",
]
