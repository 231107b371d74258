"""Recursive-descent parser for pure regexes and the one-backreference form.

Grammar (whitespace is significant, every character not listed is a literal)::

    regex     := branch ( "|" branch )*
    branch    := piece*
    piece     := atom ( "*" | "+" | "?" )?
    atom      := char | "." | class | "(?:" regex ")" | "(" regex ")" | "\\1" | escape
    class     := "[" "^"? item+ "]"
    item      := classchar ( "-" classchar )?
    escape    := "\\" ( "n" | "t" | "r" | "f" | "v" | any non-alphanumeric character )

``(`` ... ``)`` is the capture and ``\\1`` the reference; both are only legal
in a rewb. ``^``, ``$`` and ``\\d``-style classes are rejected rather than
silently read as literals.
"""

import logging
from dataclasses import dataclass
from typing import List, Set, Tuple, Union

from ..errors import PatternSyntaxError, RewbFormError
from .ast import (
    AnyChar,
    Alternation,
    CharClass,
    Concat,
    Literal,
    Option,
    Plus,
    RegexAst,
    RewbQuery,
    Star,
    alternation,
    concat,
)

logger = logging.getLogger(__name__)

_ESCAPES = {"n": "\n", "t": "\t", "r": "\r", "f": "\f", "v": "\v"}
_QUANTIFIERS = {"*": Star, "+": Plus, "?": Option}


@dataclass(frozen=True)
class _Capture:
    child: "_Node"
    position: int


@dataclass(frozen=True)
class _BackRef:
    position: int


# Parse trees may still hold capture/reference markers until the rewb split.
_Node = Union[RegexAst, _Capture, _BackRef]


class _Parser:
    def __init__(self, text: str, allow_backrefs: bool):
        self.text = text
        self.pos = 0
        self.allow_backrefs = allow_backrefs

    def error(self, message: str, position: int = -1) -> PatternSyntaxError:
        return PatternSyntaxError(message, self.text, self.pos if position < 0 else position)

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def parse(self) -> _Node:
        node = self.parse_alternation()
        if self.pos < len(self.text):
            # Only an unmatched ")" stops the top-level alternation early.
            raise self.error("unbalanced parenthesis")
        return node

    def parse_alternation(self) -> _Node:
        branches = [self.parse_branch()]
        while self.peek() == "|":
            self.pos += 1
            branches.append(self.parse_branch())
        return alternation(branches)  # type: ignore[arg-type]

    def parse_branch(self) -> _Node:
        pieces: List[_Node] = []
        while self.pos < len(self.text) and self.peek() not in "|)":
            pieces.append(self.parse_piece())
        return concat(pieces)  # type: ignore[arg-type]

    def parse_piece(self) -> _Node:
        start = self.pos
        if self.peek() in _QUANTIFIERS:
            raise self.error("nothing to repeat")
        atom = self.parse_atom()
        if self.peek() in _QUANTIFIERS:
            quantifier = _QUANTIFIERS[self.peek()]
            self.pos += 1
            if self.peek() in _QUANTIFIERS:
                raise self.error("multiple repeat")
            if isinstance(atom, (_Capture, _BackRef)):
                # Kept as a marker so the rewb check can report it precisely.
                return _Quantified(atom, start)
            return quantifier(atom)
        return atom

    def parse_atom(self) -> _Node:
        char = self.peek()
        start = self.pos
        if char == "(":
            if self.text.startswith("(?:", self.pos):
                capture = False
                self.pos += 3
            elif self.text.startswith("(?", self.pos):
                raise self.error("unsupported group syntax")
            else:
                capture = True
                self.pos += 1
            inner = self.parse_alternation()
            if self.peek() != ")":
                raise self.error("unbalanced parenthesis", start)
            self.pos += 1
            if capture:
                if not self.allow_backrefs:
                    raise self.error("capturing group in a pure regular expression", start)
                return _Capture(inner, start)
            return inner
        if char == "[":
            return self.parse_class()
        if char == ".":
            self.pos += 1
            return AnyChar()
        if char in "^$":
            raise self.error("anchors are not supported")
        if char == "\\":
            return self.parse_escape()
        self.pos += 1
        return Literal(char)

    def parse_escape(self) -> _Node:
        start = self.pos
        self.pos += 1
        if self.pos >= len(self.text):
            raise self.error("dangling backslash", start)
        char = self.text[self.pos]
        self.pos += 1
        if char.isdigit():
            if not self.allow_backrefs:
                raise self.error("backreference in a pure regular expression", start)
            if char != "1":
                raise RewbFormError(f"only \\1 is supported, found \\{char}", self.text)
            return _BackRef(start)
        return Literal(self.escaped_char(char, start))

    def escaped_char(self, char: str, start: int) -> str:
        if char in _ESCAPES:
            return _ESCAPES[char]
        if char.isalnum():
            raise self.error(f"unsupported escape \\{char}", start)
        return char

    def parse_class(self) -> RegexAst:
        start = self.pos
        self.pos += 1
        negated = self.peek() == "^"
        if negated:
            self.pos += 1
        chars: Set[str] = set()
        first = True
        while True:
            if self.pos >= len(self.text):
                raise self.error("unterminated character class", start)
            if self.peek() == "]" and not first:
                self.pos += 1
                break
            low = self.class_char()
            if self.peek() == "-" and self.text[self.pos + 1 : self.pos + 2] not in ("", "]"):
                range_start = self.pos
                self.pos += 1
                high = self.class_char()
                if ord(high) < ord(low):
                    raise self.error("bad character range", range_start)
                chars.update(chr(code) for code in range(ord(low), ord(high) + 1))
            else:
                chars.add(low)
            first = False
        return CharClass(frozenset(chars), negated)

    def class_char(self) -> str:
        char = self.text[self.pos]
        if char == "\\":
            start = self.pos
            if self.pos + 1 >= len(self.text):
                raise self.error("dangling backslash", start)
            self.pos += 2
            return self.escaped_char(self.text[self.pos - 1], start)
        self.pos += 1
        return char


@dataclass(frozen=True)
class _Quantified:
    """A capture or reference under a quantifier; always rejected by parse_rewb."""

    child: Union[_Capture, _BackRef]
    position: int


def _markers(node: _Node) -> Tuple[int, int, bool]:
    """Count captures and references in ``node``; flag any that are quantified."""
    if isinstance(node, _Capture):
        captures, refs, quantified = _markers(node.child)
        return captures + 1, refs, quantified
    if isinstance(node, _BackRef):
        return 0, 1, False
    if isinstance(node, _Quantified):
        captures, refs, _ = _markers(node.child)
        return captures, refs, True
    if isinstance(node, (Concat, Alternation)):
        totals = [_markers(child) for child in node.children]  # type: ignore[arg-type]
        return (
            sum(t[0] for t in totals),
            sum(t[1] for t in totals),
            any(t[2] for t in totals),
        )
    if isinstance(node, (Star, Plus, Option)):
        captures, refs, _ = _markers(node.child)  # type: ignore[arg-type]
        return captures, refs, captures + refs > 0
    return 0, 0, False


def parse_regex(text: str) -> RegexAst:
    """Parse a pure regular expression (no capture, no reference)."""
    node = _Parser(text, allow_backrefs=False).parse()
    return node  # type: ignore[return-value]


def parse_rewb(text: str) -> RewbQuery:
    """Parse ``e0 (e) e1 \\1 e2`` into its four pure components.

    Raises RewbFormError when the pattern has zero or several captures, zero
    or several references, the reference before the capture, or a capture or
    reference nested under a quantifier, an alternation or the capture itself.
    """
    node = _Parser(text, allow_backrefs=True).parse()
    captures, refs, quantified = _markers(node)
    if captures != 1:
        raise RewbFormError(f"expected exactly one capture group, found {captures}", text)
    if refs != 1:
        raise RewbFormError(f"expected exactly one \\1 reference, found {refs}", text)
    if quantified:
        raise RewbFormError("capture group or reference under a quantifier", text)

    items = list(node.children) if isinstance(node, Concat) else [node]
    capture_at = [k for k, item in enumerate(items) if isinstance(item, _Capture)]
    ref_at = [k for k, item in enumerate(items) if isinstance(item, _BackRef)]
    if not capture_at or not ref_at:
        raise RewbFormError("capture group and reference must both be at the top level", text)
    capture_index, ref_index = capture_at[0], ref_at[0]
    if ref_index < capture_index:
        raise RewbFormError("reference \\1 appears before the capture group", text)

    capture = items[capture_index]
    assert isinstance(capture, _Capture)
    if _markers(capture.child)[:2] != (0, 0):
        raise RewbFormError("capture group may not contain a capture or reference", text)

    query = RewbQuery(
        e0=concat(items[:capture_index]),  # type: ignore[arg-type]
        e=capture.child,  # type: ignore[arg-type]
        e1=concat(items[capture_index + 1 : ref_index]),  # type: ignore[arg-type]
        e2=concat(items[ref_index + 1 :]),  # type: ignore[arg-type]
        source=text,
    )
    logger.debug(f"Parsed rewb {text!r}: length {query.length}, components {query.lengths}")
    return query

