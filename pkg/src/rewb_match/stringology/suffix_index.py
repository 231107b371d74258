"""Suffix array and LCP array of a sentinel-terminated string."""

import logging
from dataclasses import dataclass
from typing import List

from pydivsufsort import divsufsort, kasai

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SuffixIndex:
    """Suffix array and LCP array of ``text`` followed by an out-of-band sentinel.

    Both arrays use the 1-based positions of the text: ``sa[k]`` is the start of
    the (k+1)-th smallest suffix, the sentinel suffix ``len(text) + 1`` first.
    ``lcp[k]`` is the longest common prefix of the suffixes at ``sa[k-1]`` and
    ``sa[k]``, with ``lcp[0] = 0``.
    """

    text: str
    sa: List[int]
    lcp: List[int]

    def __len__(self) -> int:
        return len(self.sa)

    def suffix(self, rank: int) -> str:
        return self.text[self.sa[rank] - 1 :]


def build_suffix_index(text: str) -> SuffixIndex:
    """Index a symbol string (one character per byte, as ``as_symbols`` returns).

    divsufsort orders a suffix before every longer suffix it prefixes, which is
    the order a sentinel smaller than every byte gives; the empty sentinel
    suffix is then placed first by hand.
    """
    n = len(text)
    if n == 0:
        return SuffixIndex(text=text, sa=[1], lcp=[0])

    data = text.encode("latin-1")
    starts = divsufsort(data)
    # kasai gives lcp(sa[i], sa[i+1]) with -1 in the last slot
    adjacent = kasai(data, starts)
    sa = [n + 1] + [int(start) + 1 for start in starts]
    lcp = [0, 0] + [int(h) for h in adjacent[: n - 1]]
    logger.debug(f"Built suffix index for {n} characters")
    return SuffixIndex(text=text, sa=sa, lcp=lcp)
