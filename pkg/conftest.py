"""Pytest configuration for rewb-match tests."""

import pytest

from rewb_match.matching.core import MatchContext, build_context
from rewb_match.matching.corpus import (
    BINARY_ALPHABET,
    EXAMPLE_PATTERN,
    EXAMPLE_SUBJECT,
    MISSISSIMISS,
)
from rewb_match.matching.query import CompiledQuery, compile_pattern


@pytest.fixture
def example_subject() -> str:
    """abbabbabbabba, the subject the matcher walkthroughs use."""
    return EXAMPLE_SUBJECT


@pytest.fixture
def mississimiss() -> str:
    return MISSISSIMISS


@pytest.fixture
def example_compiled() -> CompiledQuery:
    """The walkthrough rewb compiled over {a, b}."""
    return compile_pattern(EXAMPLE_PATTERN, BINARY_ALPHABET)


@pytest.fixture
def example_context(example_compiled: CompiledQuery, example_subject: str) -> MatchContext:
    return build_context(example_compiled, example_subject)
