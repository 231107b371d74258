"""Syntax trees for pure regular expressions and the one-backreference form."""

from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Tuple, Union


@dataclass(frozen=True)
class Empty:
    """Matches only the empty string."""


@dataclass(frozen=True)
class Literal:
    char: str


@dataclass(frozen=True)
class AnyChar:
    """`.` - any character of the alphabet the automaton is compiled with."""


@dataclass(frozen=True)
class CharClass:
    chars: FrozenSet[str]
    negated: bool = False


@dataclass(frozen=True)
class Concat:
    children: Tuple["RegexAst", ...]


@dataclass(frozen=True)
class Alternation:
    children: Tuple["RegexAst", ...]


@dataclass(frozen=True)
class Star:
    child: "RegexAst"


@dataclass(frozen=True)
class Plus:
    child: "RegexAst"


@dataclass(frozen=True)
class Option:
    child: "RegexAst"


RegexAst = Union[Empty, Literal, AnyChar, CharClass, Concat, Alternation, Star, Plus, Option]

EMPTY = Empty()


def concat(parts: Iterable[RegexAst]) -> RegexAst:
    """Build a normalized concatenation.

    Nested concatenations are flattened and ε factors dropped, so the result
    is ``Empty`` for no parts, the part itself for one, and a ``Concat`` with
    at least two children otherwise.
    """
    children: List[RegexAst] = []
    for part in parts:
        if isinstance(part, Concat):
            children.extend(part.children)
        elif not isinstance(part, Empty):
            children.append(part)
    if not children:
        return EMPTY
    if len(children) == 1:
        return children[0]
    return Concat(tuple(children))


def alternation(parts: Iterable[RegexAst]) -> RegexAst:
    """Build a normalized alternation (nested alternations flattened)."""
    children: List[RegexAst] = []
    for part in parts:
        if isinstance(part, Alternation):
            children.extend(part.children)
        else:
            children.append(part)
    if not children:
        return EMPTY
    if len(children) == 1:
        return children[0]
    return Alternation(tuple(children))


def node_count(ast: RegexAst) -> int:
    """Number of nodes in the tree; this is the pattern length m."""
    if isinstance(ast, (Concat, Alternation)):
        return 1 + sum(node_count(child) for child in ast.children)
    if isinstance(ast, (Star, Plus, Option)):
        return 1 + node_count(ast.child)
    return 1


def reverse_ast(ast: RegexAst) -> RegexAst:
    """Return a tree for the reversed language by reversing every concatenation."""
    if isinstance(ast, Concat):
        return Concat(tuple(reverse_ast(child) for child in reversed(ast.children)))
    if isinstance(ast, Alternation):
        return Alternation(tuple(reverse_ast(child) for child in ast.children))
    if isinstance(ast, Star):
        return Star(reverse_ast(ast.child))
    if isinstance(ast, Plus):
        return Plus(reverse_ast(ast.child))
    if isinstance(ast, Option):
        return Option(reverse_ast(ast.child))
    return ast


@dataclass(frozen=True)
class RewbQuery:
    """A parsed ``e0 (e) e1 \\1 e2`` pattern; absent parts are ``Empty``."""

    e0: RegexAst
    e: RegexAst
    e1: RegexAst
    e2: RegexAst
    source: str = ""

    # One node each for the capture and the reference token.
    TOKEN_OVERHEAD = 2

    @property
    def lengths(self) -> Tuple[int, int, int, int]:
        return (node_count(self.e0), node_count(self.e), node_count(self.e1), node_count(self.e2))

    @property
    def length(self) -> int:
        return sum(self.lengths) + self.TOKEN_OVERHEAD
