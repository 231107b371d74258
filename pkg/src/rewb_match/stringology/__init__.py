"""Suffix index and right-maximal repeat enumeration."""

from .repeats import RepeatRecord, enum_right_maximal_repeats, forward_map, max_overlap
from .suffix_index import SuffixIndex, build_suffix_index

__all__ = [
    "RepeatRecord",
    "SuffixIndex",
    "build_suffix_index",
    "enum_right_maximal_repeats",
    "forward_map",
    "max_overlap",
]
