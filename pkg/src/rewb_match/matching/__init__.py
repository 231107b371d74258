"""The quadratic matcher, its compiled queries and the reference oracles."""

from .core import (
    MatchContext,
    MatchStats,
    MatchVerdict,
    build_context,
    build_pre_alpha,
    has_square,
    int_med,
    match,
    match3a,
    match3b,
    match_alpha,
    match_compiled,
    match_rewb,
)
from .oracles import (
    Witness,
    brute_force_match,
    brute_force_right_maximal_repeats,
    cubic_match,
    match1,
    match2,
    rimp,
)
from .query import CompiledQuery, compile_pattern, compile_query, instantiate, pure_concat

__all__ = [
    "CompiledQuery",
    "MatchContext",
    "MatchStats",
    "MatchVerdict",
    "Witness",
    "brute_force_match",
    "brute_force_right_maximal_repeats",
    "build_context",
    "build_pre_alpha",
    "compile_pattern",
    "compile_query",
    "cubic_match",
    "has_square",
    "instantiate",
    "int_med",
    "match",
    "match1",
    "match2",
    "match3a",
    "match3b",
    "match_alpha",
    "match_compiled",
    "match_rewb",
    "pure_concat",
    "rimp",
]
