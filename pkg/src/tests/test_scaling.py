"""Step-count growth of the fast matcher and the cubic baseline on (abb)^k."""

import pytest

from rewb_match.commands.bench import bench_size
from rewb_match.matching.core import match_compiled
from rewb_match.matching.corpus import BINARY_ALPHABET, EXAMPLE_PATTERN, family_subject
from rewb_match.matching.query import compile_pattern


def _ratios(algo, sizes):
    steps = [bench_size(EXAMPLE_PATTERN, "abb", n, algo, BINARY_ALPHABET).steps for n in sizes]
    return [later / earlier for earlier, later in zip(steps, steps[1:])]


def test_family_subject():
    """Test the family generator cuts the repeated seed to length."""
    assert family_subject("abb", 7) == "abbabba"
    assert family_subject("abb", 0) == ""
    with pytest.raises(ValueError):
        family_subject("", 3)


def test_step_budget():
    """Test that simulation work stays within |N_e1| steps per character per repeat."""
    compiled = compile_pattern(EXAMPLE_PATTERN, BINARY_ALPHABET)
    for n in (30, 60, 90):
        w = family_subject("abb", n)
        stats = match_compiled(compiled, w, exhaustive=True).stats
        simulation = stats.nfass_steps + stats.intmed_steps + stats.match3b_steps
        assert simulation <= (compiled.nfa_e1.size + 3) * stats.repeats * n
        assert stats.repeats <= n - 1


@pytest.mark.slow
def test_fast_matcher_grows_quadratically():
    """Test that doubling n at most about quadruples the step count."""
    for ratio in _ratios("fast", [60, 120, 240, 480]):
        assert ratio <= 4.6


@pytest.mark.slow
def test_cubic_baseline_grows_cubically():
    """Test that the cubic baseline's doubling ratio exceeds the quadratic one."""
    for ratio in _ratios("cubic", [60, 120, 240]):
        assert ratio > 6


def test_bench_family_is_matched_as_bytes():
    """Test that a non-ASCII family word is cut by bytes, like the pattern."""
    # éé is four bytes with right-maximal repeats \xc3\xa9 and \xa9
    row = bench_size("(é)\\1", "é", 4, "fast", "é")
    assert row.family == "é"
    assert row.repeats == 2
