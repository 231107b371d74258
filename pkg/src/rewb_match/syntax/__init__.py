"""Pattern syntax: trees, parser, reversal and printing."""

from .ast import (
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
    RewbQuery,
    Star,
    alternation,
    concat,
    node_count,
    reverse_ast,
)
from .parser import parse_regex, parse_rewb
from .printer import print_regex, print_rewb

__all__ = [
    "EMPTY",
    "Alternation",
    "AnyChar",
    "CharClass",
    "Concat",
    "Empty",
    "Literal",
    "Option",
    "Plus",
    "RegexAst",
    "RewbQuery",
    "Star",
    "alternation",
    "concat",
    "node_count",
    "parse_regex",
    "parse_rewb",
    "print_regex",
    "print_rewb",
    "reverse_ast",
]
