"""Thompson construction of NFAs over bitset state sets.

A state set is a Python ``int`` whose bit ``q`` is set when state ``q`` is a
member. Every character transition built here goes from a state ``s`` to
``s + 1``, so one character step over a whole set is a mask and a shift.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Tuple

from ..syntax.ast import (
    Alternation,
    AnyChar,
    CharClass,
    Concat,
    Empty,
    Literal,
    Option,
    Plus,
    RegexAst,
    Star,
    node_count,
)

logger = logging.getLogger(__name__)

StateSet = int

# Thompson builds at most two states per node; the engine promises four.
STATES_PER_NODE = 4


@dataclass(frozen=True)
class Label:
    """The characters a transition consumes."""

    chars: FrozenSet[str]
    negated: bool = False

    def accepts(self, char: str, alphabet: FrozenSet[str]) -> bool:
        if self.negated:
            return char in alphabet and char not in self.chars
        return char in self.chars


@dataclass(frozen=True)
class Nfa:
    """An immutable ε-NFA with a single initial and a single accept state.

    ``eps[q]`` lists the ε-successors of ``q``; ``labels[q]`` is the label of
    the character transition ``q -> q + 1`` or ``None``.
    """

    size: int
    eps: Tuple[Tuple[int, ...], ...]
    labels: Tuple[Optional[Label], ...]
    initial: int
    accept: int
    alphabet: FrozenSet[str]
    # char -> bitset of states whose character transition accepts it
    char_masks: Dict[str, int] = field(repr=False, compare=False)
    start_set: StateSet = field(repr=False, compare=False)

    @property
    def accept_mask(self) -> StateSet:
        return 1 << self.accept

    @property
    def full_mask(self) -> StateSet:
        return (1 << self.size) - 1

    def char_mask(self, char: str) -> StateSet:
        return self.char_masks.get(char, 0)


class _Builder:
    def __init__(self) -> None:
        self.eps: List[List[int]] = []
        self.labels: List[Optional[Label]] = []

    def new_state(self) -> int:
        self.eps.append([])
        self.labels.append(None)
        return len(self.eps) - 1

    def atom(self, label: Label) -> Tuple[int, int]:
        start = self.new_state()
        end = self.new_state()
        self.labels[start] = label
        return start, end

    def build(self, ast: RegexAst) -> Tuple[int, int]:
        if isinstance(ast, Empty):
            start, end = self.new_state(), self.new_state()
            self.eps[start].append(end)
            return start, end
        if isinstance(ast, Literal):
            return self.atom(Label(frozenset(ast.char)))
        if isinstance(ast, AnyChar):
            return self.atom(Label(frozenset(), negated=True))
        if isinstance(ast, CharClass):
            return self.atom(Label(ast.chars, ast.negated))
        if isinstance(ast, Concat):
            fragments = [self.build(child) for child in ast.children]
            for (_, left_end), (right_start, _) in zip(fragments, fragments[1:]):
                self.eps[left_end].append(right_start)
            return fragments[0][0], fragments[-1][1]
        if isinstance(ast, Alternation):
            start = self.new_state()
            fragments = [self.build(child) for child in ast.children]
            end = self.new_state()
            for child_start, child_end in fragments:
                self.eps[start].append(child_start)
                self.eps[child_end].append(end)
            return start, end

        start = self.new_state()
        child_start, child_end = self.build(ast.child)
        end = self.new_state()
        self.eps[start].append(child_start)
        self.eps[child_end].append(end)
        if isinstance(ast, (Star, Plus)):
            self.eps[child_end].append(child_start)
        if isinstance(ast, (Star, Option)):
            self.eps[start].append(end)
        return start, end


def closure(eps: Tuple[Tuple[int, ...], ...], states: StateSet) -> StateSet:
    """Breadth-first ε-closure; the result mask doubles as the visited buffer."""
    result = states
    frontier = states
    while frontier:
        low = frontier & -frontier
        frontier ^= low
        for target in eps[low.bit_length() - 1]:
            bit = 1 << target
            if not result & bit:
                result |= bit
                frontier |= bit
    return result


def _char_masks(labels: Tuple[Optional[Label], ...], alphabet: FrozenSet[str]) -> Dict[str, int]:
    universe = set(alphabet)
    for label in labels:
        if label is not None and not label.negated:
            universe.update(label.chars)
    masks: Dict[str, int] = {}
    for char in universe:
        mask = 0
        for state, label in enumerate(labels):
            if label is not None and label.accepts(char, alphabet):
                mask |= 1 << state
        if mask:
            masks[char] = mask
    return masks


def compile_nfa(ast: RegexAst, alphabet: FrozenSet[str] = frozenset()) -> Nfa:
    """Thompson-construct an NFA for ``ast``.

    ``alphabet`` is the universe `.` and negated classes range over.
    """
    builder = _Builder()
    initial, accept = builder.build(ast)
    labels = tuple(builder.labels)
    eps = tuple(tuple(targets) for targets in builder.eps)
    size = len(eps)
    assert size <= STATES_PER_NODE * node_count(ast)

    nfa = Nfa(
        size=size,
        eps=eps,
        labels=labels,
        initial=initial,
        accept=accept,
        alphabet=frozenset(alphabet),
        char_masks=_char_masks(labels, frozenset(alphabet)),
        start_set=closure(eps, 1 << initial),
    )
    logger.debug(f"Compiled NFA with {size} states from {node_count(ast)} nodes")
    return nfa
