"""Slow reference implementations used by the tests, `check` and `bench`.

None of these is on the production path. ``brute_force_match`` enumerates the
definition directly, ``cubic_match`` runs the single-repeat simulation on every
repeat of the subject, and ``match2`` is the nonoverlapping-only predecessor
of ``match3a``.
"""

import logging
from collections import deque
from dataclasses import dataclass
from typing import Deque, Dict, List, Optional, Sequence, Tuple

from ..automata.nfa import Nfa
from ..automata.simulation import (
    accepts,
    step,
    summary_accepts_from,
    summary_init,
    summary_inject,
    summary_step,
)
from ..stringology.repeats import RepeatRecord, enum_right_maximal_repeats
from .core import MatchContext, MatchStats, MatchVerdict, build_context, build_pre_alpha, int_med
from .query import CompiledQuery

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Witness:
    """A decomposition w = w[..i-1] · β · w[i+|β|..j-1] · β · w[j+|β|..]."""

    beta: str
    i: int
    j: int

    def segments(self, w: str) -> Tuple[str, str, str, str, str]:
        k = len(self.beta)
        return (
            w[: self.i - 1],
            w[self.i - 1 : self.i - 1 + k],
            w[self.i - 1 + k : self.j - 1],
            w[self.j - 1 : self.j - 1 + k],
            w[self.j - 1 + k :],
        )

    def validate(self, compiled: CompiledQuery, w: str) -> bool:
        prefix, first, middle, second, suffix = self.segments(w)
        return (
            first == self.beta
            and second == self.beta
            and self.i + len(self.beta) <= self.j
            and accepts(compiled.nfa_e0, prefix)
            and accepts(compiled.nfa_e, self.beta)
            and accepts(compiled.nfa_e1, middle)
            and accepts(compiled.nfa_e2, suffix)
        )


class _Acceptor:
    """Memoized plain acceptance of one NFA over substrings."""

    def __init__(self, nfa: Nfa):
        self.nfa = nfa
        self.cache: Dict[str, bool] = {}

    def __call__(self, text: str) -> bool:
        if text not in self.cache:
            self.cache[text] = accepts(self.nfa, text)
        return self.cache[text]


def brute_force_match(compiled: CompiledQuery, w: str) -> Optional[Witness]:
    """Return the first witness by (|β|, i, j), or None if w is not in the language."""
    n = len(w)
    in_e0 = _Acceptor(compiled.nfa_e0)
    in_e = _Acceptor(compiled.nfa_e)
    in_e1 = _Acceptor(compiled.nfa_e1)
    in_e2 = _Acceptor(compiled.nfa_e2)
    for k in range(0, n // 2 + 1):
        for i in range(1, n - 2 * k + 2):
            beta = w[i - 1 : i - 1 + k]
            if not in_e(beta) or not in_e0(w[: i - 1]):
                continue
            for j in range(i + k, n - k + 2):
                if w[j - 1 : j - 1 + k] != beta:
                    continue
                if in_e1(w[i - 1 + k : j - 1]) and in_e2(w[j - 1 + k :]):
                    return Witness(beta=beta, i=i, j=j)
    return None


def match1(ctx: MatchContext, alpha: str, idx: Sequence[int]) -> bool:
    """Whether e0·α·e1·α·e2 matches w, given every occurrence of α in ``idx``.

    Pending injections are kept in a FIFO so overlapping occurrences of an
    arbitrary repeat are handled as well.
    """
    compiled = ctx.compiled
    ctx.stats.oracle_steps += len(alpha)
    if not accepts(compiled.nfa_e, alpha):
        return False
    nfa = compiled.nfa_e1
    size = len(alpha)
    states = 0
    que: Optional[Deque[int]] = None
    i_prev = 0
    for i_next in idx:
        if que is not None:
            for i in range(i_prev, i_next):
                if states:
                    states = step(nfa, states, ctx.char(i))
                    ctx.stats.oracle_steps += 1
                if que and que[0] == i:
                    states |= nfa.start_set
                    que.popleft()
            if states & nfa.accept_mask and ctx.suf[i_next + size]:
                return True
        i_prev = i_next
        if ctx.pre[i_prev - 1]:
            if que is None:
                que = deque()
            que.append(i_prev + size - 1)
    return False


def match2(ctx: MatchContext, rec: RepeatRecord) -> bool:
    """Summarized simulation for a nonoverlapping right-maximal repeat."""
    assert rec.d == 0, "match2 requires a nonoverlapping repeat"
    pre_alpha = build_pre_alpha(ctx, rec.repeat)
    nfa = ctx.compiled.nfa_e1
    size = rec.length
    summary = summary_init(nfa)
    i_que: Optional[int] = None
    i_prev = 0
    for i_next in rec.idx:
        if i_que is not None:
            for i in range(i_prev, i_next):
                if any(summary):
                    ctx.stats.nfass_steps += sum(1 for row in summary if row)
                    summary = summary_step(nfa, summary, ctx.char(i))
                if i == i_que:
                    summary = summary_inject(summary)
            reached = int_med(ctx, pre_alpha, i_next, i_next + size - 1)
            if summary_accepts_from(nfa, summary, reached):
                return True
        i_prev = i_next
        if ctx.pre[i_prev - 1]:
            i_que = i_prev + size - 1
    return False


def cubic_match(compiled: CompiledQuery, w: str, exhaustive: bool = False) -> MatchVerdict:
    """Run match1 on every repeat of w, after the same ε reduction as the fast path.

    A repeat extends to a right-maximal repeat with the same occurrences, so
    examining each prefix of each enumerated record covers every repeat.
    Prefixes shared by several records are visited once per record.
    """
    stats = MatchStats()
    matched = False
    if compiled.e_accepts_empty and accepts(compiled.nfa_without_reference, w):
        stats.epsilon_path = True
        matched = True
        if not exhaustive:
            return MatchVerdict(matched=True, stats=stats)
    ctx = build_context(compiled, w, stats)
    for rec in enum_right_maximal_repeats(w):
        for k in range(1, rec.length + 1):
            stats.repeats += 1
            if match1(ctx, rec.repeat[:k], rec.idx):
                matched = True
                if not exhaustive:
                    break
        if matched and not exhaustive:
            break
    logger.debug(f"Cubic baseline examined {stats.repeats} repeats, matched={matched}")
    return MatchVerdict(matched=matched, stats=stats)


def rimp(w: str, beta: str) -> str:
    """Extend the repeat ``beta`` to the right while all its occurrences agree.

    The end of w counts as a character distinct from every other, so a repeat
    with an occurrence touching the end is never extended.
    """
    occurrences = [i for i in range(len(w) - len(beta) + 1) if w.startswith(beta, i)]
    assert len(occurrences) >= 2, f"{beta!r} is not a repeat of {w!r}"
    length = len(beta)
    while True:
        nexts = {w[i + length] if i + length < len(w) else None for i in occurrences}
        if len(nexts) != 1 or None in nexts:
            return w[occurrences[0] : occurrences[0] + length]
        length += 1


def brute_force_right_maximal_repeats(w: str) -> Dict[str, List[int]]:
    """Every right-maximal repeat of w mapped to its sorted 1-based occurrences.

    Scans all substrings directly, independent of the suffix index.
    """
    occurrences: Dict[str, List[int]] = {}
    for start in range(len(w)):
        for end in range(start + 1, len(w) + 1):
            occurrences.setdefault(w[start:end], []).append(start + 1)
    return {
        alpha: idx
        for alpha, idx in occurrences.items()
        if len(idx) >= 2 and rimp(w, alpha) == alpha
    }
