"""Three-way agreement of the fast matcher, the cubic baseline and brute force."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rewb_match.commands.check import check_instance
from rewb_match.matching.core import match_compiled
from rewb_match.matching.corpus import BINARY_ALPHABET, CORPUS, random_instances
from rewb_match.matching.oracles import brute_force_match, cubic_match
from rewb_match.matching.query import compile_pattern

COMPILED = {pattern: compile_pattern(pattern, BINARY_ALPHABET) for pattern in CORPUS}


@given(st.sampled_from(CORPUS), st.text(alphabet="ab", max_size=9))
@settings(max_examples=400, deadline=None)
def test_fast_agrees_with_brute_force(pattern, w):
    """Test the fast matcher against brute force on generated instances."""
    compiled = COMPILED[pattern]
    witness = brute_force_match(compiled, w)
    assert match_compiled(compiled, w).matched == (witness is not None)
    if witness is not None:
        assert witness.validate(compiled, w)


def test_overlapping_repeat_patterns():
    """Test subjects whose matches need overlapping occurrences of the repeat."""
    compiled = COMPILED[r"((?:ab)+a?)x?\1"]
    for w in ["abaaba", "ababab", "abababab", "ababaababa", "aba", "abab"]:
        expected = brute_force_match(compiled, w) is not None
        assert match_compiled(compiled, w).matched == expected, w
        assert cubic_match(compiled, w).matched == expected, w


@pytest.mark.slow
def test_three_way_agreement():
    """Test fast, cubic and brute force on 5000 seeded instances up to length 12."""
    divergences = []
    for number, pattern, w in random_instances(20240501, 5000, 12):
        divergence = check_instance(COMPILED[pattern], number, pattern, w)
        if divergence is not None:
            divergences.append(divergence)
    assert divergences == []
