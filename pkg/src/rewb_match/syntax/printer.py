"""Canonical pattern text for syntax trees; the output re-parses to an equal tree."""

from typing import Set

from .ast import (
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
)

_SPECIAL: Set[str] = set("\\|()[].*+?^$")
_CLASS_SPECIAL: Set[str] = set("\\]^-")
_CONTROL = {"\n": "\\n", "\t": "\\t", "\r": "\\r", "\f": "\\f", "\v": "\\v"}


def _escape(char: str, special: Set[str]) -> str:
    if char in _CONTROL:
        return _CONTROL[char]
    return "\\" + char if char in special else char


def _group(text: str) -> str:
    return f"(?:{text})"


def print_regex(ast: RegexAst) -> str:
    """Render ``ast`` in the grammar accepted by ``parse_regex``."""
    if isinstance(ast, Empty):
        return ""
    if isinstance(ast, Literal):
        return _escape(ast.char, _SPECIAL)
    if isinstance(ast, AnyChar):
        return "."
    if isinstance(ast, CharClass):
        body = "".join(_escape(char, _CLASS_SPECIAL) for char in sorted(ast.chars))
        return f"[{'^' if ast.negated else ''}{body}]"
    if isinstance(ast, Concat):
        return "".join(
            _group(print_regex(child)) if isinstance(child, Alternation) else print_regex(child)
            for child in ast.children
        )
    if isinstance(ast, Alternation):
        return "|".join(print_regex(child) for child in ast.children)
    suffix = {Star: "*", Plus: "+", Option: "?"}[type(ast)]
    child = ast.child
    if isinstance(child, (Literal, AnyChar, CharClass)):
        return print_regex(child) + suffix
    return _group(print_regex(child)) + suffix


def print_rewb(query: RewbQuery) -> str:
    """Render a query back to ``e0(e)e1\\1e2`` text."""

    def part(ast: RegexAst) -> str:
        text = print_regex(ast)
        return _group(text) if isinstance(ast, Alternation) else text

    return f"{part(query.e0)}({print_regex(query.e)}){part(query.e1)}\\1{part(query.e2)}"
