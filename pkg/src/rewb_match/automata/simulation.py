"""NFA simulation primitives: ε-closure, Δ-steps, prefix sweeps and summaries.

Positions in the Boolean arrays returned here follow a 1-based
convention: ``result[i]`` concerns the prefix of length ``i``, so index 0 is
the empty prefix.
"""

from typing import Iterator, List, Tuple

from .nfa import Nfa, StateSet, closure

# Row l is the simulation set obtained with state l regarded as initial.
SummaryVector = Tuple[StateSet, ...]
BoolArray = List[bool]


def states_of(states: StateSet) -> Iterator[int]:
    """Yield the members of a bitset in increasing order."""
    while states:
        low = states & -states
        yield low.bit_length() - 1
        states ^= low


def eps_closure(nfa: Nfa, states: StateSet) -> StateSet:
    return closure(nfa.eps, states)


def step(nfa: Nfa, states: StateSet, char: str) -> StateSet:
    """Δ(S, a) = ecl(δ(S, a)); character transitions all go from q to q + 1."""
    moved = (states & nfa.char_mask(char)) << 1
    if not moved:
        return 0
    return closure(nfa.eps, moved)


def run(nfa: Nfa, text: str, start: StateSet) -> StateSet:
    states = start
    for char in text:
        if not states:
            break
        states = step(nfa, states, char)
    return states


def accepts(nfa: Nfa, text: str) -> bool:
    return bool(run(nfa, text, nfa.start_set) & nfa.accept_mask)


def prefix_acceptance(nfa: Nfa, text: str) -> BoolArray:
    """``result[i]`` is whether the NFA accepts ``text[..i]``, for i in [0, n]."""
    accept = nfa.accept_mask
    states = nfa.start_set
    result = [bool(states & accept)]
    for char in text:
        if states:
            states = step(nfa, states, char)
        result.append(bool(states & accept))
    return result


def summary_init(nfa: Nfa) -> SummaryVector:
    return (0,) * nfa.size


def summary_step(nfa: Nfa, summary: SummaryVector, char: str) -> SummaryVector:
    """Apply Δ rowwise; rows are not ε-closed at injection, only after a step."""
    return tuple(step(nfa, row, char) if row else 0 for row in summary)


def summary_inject(summary: SummaryVector) -> SummaryVector:
    """Add q_l to row l for every l."""
    return tuple(row | (1 << state) for state, row in enumerate(summary))


def summary_accepts_from(nfa: Nfa, summary: SummaryVector, reached: StateSet) -> bool:
    """Whether some q_l in ``reached`` has a row meeting the accept set."""
    accept = nfa.accept_mask
    return any(summary[state] & accept for state in states_of(reached))
