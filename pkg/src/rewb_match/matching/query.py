"""Compiled form of a rewb query shared by the fast matcher and the oracles."""

from dataclasses import dataclass
from functools import cached_property
from typing import FrozenSet, Optional

from ..automata.nfa import Nfa, compile_nfa
from ..config import DEFAULT_ALPHABET
from ..symbols import Text, as_symbols
from ..syntax.ast import Literal, RegexAst, RewbQuery, concat, reverse_ast
from ..syntax.parser import parse_rewb


def pure_concat(query: RewbQuery) -> RegexAst:
    """The pure regex e0·e1·e2, i.e. the query with an empty backreference."""
    return concat([query.e0, query.e1, query.e2])


def instantiate(query: RewbQuery, beta: str) -> RegexAst:
    """The pure regex e0·β·e1·β·e2 for a fixed backreferenced string β."""
    literal = concat(Literal(char) for char in beta)
    return concat([query.e0, literal, query.e1, literal, query.e2])


def resolve_alphabet(alphabet: Optional[Text]) -> FrozenSet[str]:
    return frozenset(as_symbols(DEFAULT_ALPHABET if alphabet is None else alphabet))


@dataclass(frozen=True)
class CompiledQuery:
    """A query with one NFA per component, compiled once and reused across subjects."""

    query: RewbQuery
    alphabet: FrozenSet[str]

    @cached_property
    def nfa_e0(self) -> Nfa:
        return compile_nfa(self.query.e0, self.alphabet)

    @cached_property
    def nfa_e(self) -> Nfa:
        return compile_nfa(self.query.e, self.alphabet)

    @cached_property
    def nfa_e1(self) -> Nfa:
        return compile_nfa(self.query.e1, self.alphabet)

    @cached_property
    def nfa_e2(self) -> Nfa:
        return compile_nfa(self.query.e2, self.alphabet)

    @cached_property
    def nfa_e2_reversed(self) -> Nfa:
        return compile_nfa(reverse_ast(self.query.e2), self.alphabet)

    @cached_property
    def nfa_without_reference(self) -> Nfa:
        return compile_nfa(pure_concat(self.query), self.alphabet)

    @cached_property
    def e_accepts_empty(self) -> bool:
        return bool(self.nfa_e.start_set & self.nfa_e.accept_mask)


def compile_query(query: RewbQuery, alphabet: Optional[Text] = None) -> CompiledQuery:
    return CompiledQuery(query=query, alphabet=resolve_alphabet(alphabet))


def compile_pattern(pattern: Text, alphabet: Optional[Text] = None) -> CompiledQuery:
    return compile_query(parse_rewb(as_symbols(pattern)), alphabet)
