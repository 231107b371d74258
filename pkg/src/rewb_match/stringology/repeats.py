"""Right-maximal repeat enumeration over LCP intervals.

Walks the LCP intervals of the suffix array bottom-up with a stack (after
Abouelhoda, Kurtz and Ohlebusch) and emits each right-maximal repeat together
with the sorted array of all its occurrence starts.
"""

import bisect
import heapq
import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, List, Optional, Tuple

from .suffix_index import SuffixIndex, build_suffix_index

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RepeatRecord:
    """A right-maximal repeat α of w with its occurrence array ``idx`` (1-based)."""

    length: int
    idx: Tuple[int, ...]
    repeat: str

    @cached_property
    def d(self) -> int:
        return max_overlap(self)

    @cached_property
    def fwd(self) -> Tuple[int, ...]:
        return forward_map(self)


def max_overlap(rec: RepeatRecord) -> int:
    """d = max({0} ∪ {Idx[j-1] + |α| - Idx[j]}) over adjacent occurrences."""
    idx = rec.idx
    return max([0] + [idx[j - 1] + rec.length - idx[j] for j in range(1, len(idx))])


def forward_map(rec: RepeatRecord) -> Tuple[int, ...]:
    """Fwd[j] = f(Idx[j]) = the last occurrence starting inside the one at Idx[j].

    Two pointers sweep from the right end, so the whole map costs O(|Idx|).
    """
    idx = rec.idx
    fwd = [0] * len(idx)
    left = right = len(idx) - 1
    while left >= 0:
        if idx[right] <= idx[left] + rec.length - 1:
            fwd[left] = idx[right]
            left -= 1
        else:
            right -= 1
    return tuple(fwd)


def _record(text: str, length: int, idx: List[int]) -> RepeatRecord:
    start = idx[0] - 1
    return RepeatRecord(length=length, idx=tuple(idx), repeat=text[start : start + length])


def enum_right_maximal_repeats(
    text: str, index: Optional[SuffixIndex] = None
) -> Iterator[RepeatRecord]:
    """Yield every right-maximal repeat of ``text`` exactly once.

    Records stream out as their LCP interval closes, so at most the stack of
    open intervals is held in memory.
    """
    if len(text) < 2:
        return
    index = index or build_suffix_index(text)
    sa, lcp = index.sa, index.lcp
    size = len(sa)

    # Each entry is [lcp-length, sorted occurrence starts seen so far].
    stack: List[Tuple[int, List[int]]] = [(0, [])]
    emitted = 0
    for i in range(1, size):
        next_lcp = lcp[i + 1] if i + 1 < size else 0
        top_lcp, top_idx = stack[-1]
        if next_lcp > top_lcp:
            stack.append((next_lcp, [sa[i]]))
        elif next_lcp == top_lcp:
            if top_lcp != 0:
                bisect.insort(top_idx, sa[i])
        else:
            bisect.insort(top_idx, sa[i])
            while next_lcp < stack[-1][0]:
                length, idx = stack.pop()
                emitted += 1
                yield _record(text, length, idx)
                top_lcp, top_idx = stack[-1]
                if next_lcp <= top_lcp:
                    if top_lcp != 0:
                        stack[-1] = (top_lcp, list(heapq.merge(top_idx, idx)))
                else:
                    stack.append((next_lcp, idx))
    logger.debug(f"Enumerated {emitted} right-maximal repeats of a {len(text)}-character text")
