"""Tests for printing and reversing syntax trees."""

from hypothesis import given, settings
from hypothesis import strategies as st
from syntax_helpers import binary_trees, trees

from rewb_match.automata import accepts, compile_nfa
from rewb_match.matching.corpus import CORPUS
from rewb_match.syntax import (
    EMPTY,
    parse_regex,
    parse_rewb,
    print_regex,
    print_rewb,
    reverse_ast,
)


@given(trees)
@settings(max_examples=300)
def test_print_regex_round_trips(tree):
    """Test that printed text parses back to the same tree."""
    assert parse_regex(print_regex(tree)) == tree

def test_print_regex_examples():
    """Test the canonical text of a few trees."""
    assert print_regex(parse_regex("(?:a|b)*c")) == "(?:a|b)*c"
    assert print_regex(parse_regex("(?:ab)+")) == "(?:ab)+"
    assert print_regex(parse_regex(r"\.\*")) == r"\.\*"
    assert print_regex(parse_regex("[ba]")) == "[ab]"
    assert print_regex(parse_regex("a\n")) == "a\\n"
    assert print_regex(EMPTY) == ""

def test_print_rewb_round_trips():
    """Test that every corpus rewb prints to an equivalent rewb."""
    for pattern in CORPUS:
        query = parse_rewb(pattern)
        reprinted = parse_rewb(print_rewb(query))
        assert (reprinted.e0, reprinted.e, reprinted.e1, reprinted.e2) == (
            query.e0,
            query.e,
            query.e1,
            query.e2,
        )

@given(binary_trees, st.text(alphabet="ab", max_size=8))
@settings(max_examples=300)
def test_reverse_ast_reverses_language(tree, text):
    """Test that the reversed tree accepts exactly the reversed strings."""
    forward = compile_nfa(tree, frozenset("ab"))
    backward = compile_nfa(reverse_ast(tree), frozenset("ab"))
    assert accepts(forward, text) == accepts(backward, text[::-1])

@given(trees)
@settings(max_examples=300)
def test_reverse_ast_is_an_involution(tree):
    """Test that reversing twice gives back the same tree."""
    assert reverse_ast(reverse_ast(tree)) == tree
