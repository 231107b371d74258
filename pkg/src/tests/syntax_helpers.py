"""Hypothesis strategies for syntax trees and a direct evaluator of their languages."""

from functools import lru_cache
from itertools import product
from typing import FrozenSet, Iterator

from hypothesis import strategies as st

from rewb_match.syntax import (
    EMPTY,
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
    alternation,
    concat,
)

SYMBOLS = "ab.*|()[]^-\\?+$\n"

leaves = st.one_of(
    st.just(EMPTY),
    st.just(AnyChar()),
    st.sampled_from(SYMBOLS).map(Literal),
    st.builds(
        CharClass,
        st.frozensets(st.sampled_from(SYMBOLS), min_size=1, max_size=4),
        st.booleans(),
    ),
)

trees = st.recursive(
    leaves,
    lambda children: st.one_of(
        st.lists(children, min_size=2, max_size=3).map(concat),
        st.lists(children, min_size=2, max_size=3).map(alternation),
        children.map(Star),
        children.map(Plus),
        children.map(Option),
    ),
    max_leaves=8,
)

# Trees over {a, b} only, for language-level checks against NFAs.
binary_trees = st.recursive(
    st.one_of(st.just(EMPTY), st.sampled_from("ab").map(Literal)),
    lambda children: st.one_of(
        st.lists(children, min_size=2, max_size=3).map(concat),
        st.lists(children, min_size=2, max_size=3).map(alternation),
        children.map(Star),
        children.map(Option),
    ),
    max_leaves=6,
)


def all_strings(alphabet: str, max_length: int) -> Iterator[str]:
    for length in range(max_length + 1):
        for chars in product(alphabet, repeat=length):
            yield "".join(chars)


@lru_cache(maxsize=None)
def denotes(tree: RegexAst, text: str, alphabet: FrozenSet[str]) -> bool:
    """Whether ``text`` is in the language of ``tree``, by splitting ``text`` directly."""
    if isinstance(tree, Empty):
        return text == ""
    if isinstance(tree, Literal):
        return text == tree.char
    if isinstance(tree, AnyChar):
        return len(text) == 1 and text in alphabet
    if isinstance(tree, CharClass):
        if tree.negated:
            return len(text) == 1 and text in alphabet and text not in tree.chars
        return text in tree.chars
    if isinstance(tree, Alternation):
        return any(denotes(child, text, alphabet) for child in tree.children)
    if isinstance(tree, Concat):
        head, rest = tree.children[0], tree.children[1:]
        if not rest:
            return denotes(head, text, alphabet)
        tail = Concat(rest)
        return any(
            denotes(head, text[:k], alphabet) and denotes(tail, text[k:], alphabet)
            for k in range(len(text) + 1)
        )
    if isinstance(tree, Option):
        return text == "" or denotes(tree.child, text, alphabet)
    if isinstance(tree, Plus):
        return denotes(Concat((tree.child, Star(tree.child))), text, alphabet)
    # Star: empty, or a nonempty first iteration followed by the rest
    return text == "" or any(
        denotes(tree.child, text[:k], alphabet) and denotes(tree, text[k:], alphabet)
        for k in range(1, len(text) + 1)
    )
