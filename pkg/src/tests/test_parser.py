"""Tests for the pattern parser."""

import pytest
from syntax_helpers import all_strings, denotes

from rewb_match.automata import accepts, compile_nfa
from rewb_match.errors import PatternSyntaxError, RewbError, RewbFormError
from rewb_match.matching.corpus import BINARY_ALPHABET, CORPUS, EXAMPLE_PATTERN
from rewb_match.syntax import (
    EMPTY,
    Alternation,
    AnyChar,
    CharClass,
    Concat,
    Literal,
    Option,
    Plus,
    RewbQuery,
    Star,
    parse_regex,
    parse_rewb,
)


def test_parse_regex_basic_forms():
    """Test atoms, quantifiers, groups and alternation."""
    assert parse_regex("") == EMPTY
    assert parse_regex("a") == Literal("a")
    assert parse_regex("ab*") == Concat((Literal("a"), Star(Literal("b"))))
    assert parse_regex("(?:ab)+") == Plus(Concat((Literal("a"), Literal("b"))))
    assert parse_regex("a?") == Option(Literal("a"))
    assert parse_regex(".") == AnyChar()
    assert parse_regex("a|") == Alternation((Literal("a"), EMPTY))
    assert parse_regex("a|b|c") == Alternation((Literal("a"), Literal("b"), Literal("c")))


def test_parse_regex_classes_and_escapes():
    """Test character classes and escape sequences."""
    assert parse_regex("[ab]") == CharClass(frozenset("ab"))
    assert parse_regex("[^b]") == CharClass(frozenset("b"), negated=True)
    assert parse_regex("[a-c]") == CharClass(frozenset("abc"))
    # A leading ] and a trailing - are literal
    assert parse_regex("[]a]") == CharClass(frozenset("]a"))
    assert parse_regex("[a-]") == CharClass(frozenset("a-"))
    assert parse_regex(r"\.") == Literal(".")
    assert parse_regex(r"\n") == Literal("\n")
    assert parse_regex(r"[\]]") == CharClass(frozenset("]"))


@pytest.mark.parametrize(
    "text, position",
    [
        ("ab(c", 2),
        ("a)", 1),
        ("*a", 0),
        ("a**", 2),
        ("[b-a]", 2),
        ("[a", 0),
        ("a\\", 1),
        ("^a", 0),
        ("(?=a)", 0),
        (r"\d", 0),
    ],
)
def test_parse_regex_syntax_errors(text, position):
    """Test that malformed patterns report where they fail."""
    with pytest.raises(PatternSyntaxError) as info:
        parse_regex(text)
    assert info.value.position == position
    assert info.value.pattern == text
    assert isinstance(info.value, ValueError)


def test_parse_regex_rejects_markers():
    """Test that a pure regex may not hold a capture or a reference."""
    with pytest.raises(PatternSyntaxError):
        parse_regex("(a)")
    with pytest.raises(PatternSyntaxError):
        parse_regex(r"a\1")


def test_parse_rewb_splits_components():
    """Test the split into e0, e, e1 and e2."""
    query = parse_rewb(r"(a)b\1")
    assert query == RewbQuery(e0=EMPTY, e=Literal("a"), e1=Literal("b"), e2=EMPTY, source=r"(a)b\1")
    assert query.lengths == (1, 1, 1, 1)
    assert query.length == 6

    query = parse_rewb(r"x*((?:a|b)+)y\1z")
    assert query.e0 == Star(Literal("x"))
    assert query.e == Plus(Alternation((Literal("a"), Literal("b"))))
    assert query.e1 == Literal("y")
    assert query.e2 == Literal("z")


def test_parse_rewb_walkthrough_pattern():
    """Test the walkthrough rewb's components."""
    query = parse_rewb(EXAMPLE_PATTERN)
    assert query.e == Star(Alternation((Literal("a"), Literal("b"))))
    assert query.e0 == parse_regex("a*(?:ba*)?(?:ba*)?")
    assert query.e1 == parse_regex("a*ba*ba*ba*(?:ba*ba*)*")
    assert query.e2 == parse_regex("(?:(?:a|b)(?:a|b))*")


def test_parse_rewb_empty_parts():
    """Test that an empty capture and empty surroundings become EMPTY."""
    query = parse_rewb(r"()\1")
    assert (query.e0, query.e, query.e1, query.e2) == (EMPTY, EMPTY, EMPTY, EMPTY)


@pytest.mark.parametrize(
    "text",
    [
        "(a)",
        r"a\1",
        r"\1(a)",
        r"(a)(b)\1",
        r"(a)*\1",
        r"(a)\1*",
        r"(?:(a)|b)\1",
        r"((a))\1",
        r"(a\1)",
        r"(a)\2",
    ],
)
def test_parse_rewb_form_errors(text):
    """Test that patterns outside e0(e)e1\\1e2 are rejected."""
    with pytest.raises(RewbFormError) as info:
        parse_rewb(text)
    assert isinstance(info.value, RewbError)


def test_corpus_parses():
    """Test that every built-in pattern is a valid rewb."""
    for pattern in CORPUS:
        assert parse_rewb(pattern).source == pattern


def test_walkthrough_components_count_bs():
    """Test the walkthrough components against counting predicates over {a,b}^<=8."""
    query = parse_rewb(EXAMPLE_PATTERN)
    alphabet = frozenset(BINARY_ALPHABET)
    e0, e1, e2 = (compile_nfa(part, alphabet) for part in (query.e0, query.e1, query.e2))
    for u in all_strings(BINARY_ALPHABET, 8):
        bs = u.count("b")
        assert accepts(e0, u) == (bs <= 2)
        assert accepts(e1, u) == (bs >= 3 and bs % 2 == 1)
        assert accepts(e2, u) == (len(u) % 2 == 0)


@pytest.mark.slow
def test_corpus_components_denote_their_nfa_languages():
    """Test NFA membership against direct evaluation of each corpus component."""
    alphabet = frozenset(BINARY_ALPHABET)
    words = list(all_strings(BINARY_ALPHABET, 8))
    for pattern in CORPUS:
        query = parse_rewb(pattern)
        for part in (query.e0, query.e, query.e1, query.e2):
            nfa = compile_nfa(part, alphabet)
            for u in words:
                assert accepts(nfa, u) == denotes(part, u, alphabet), (pattern, part, u)
