"""Built-in patterns and subject generators for `check`, `bench` and the tests."""

import random
from typing import Iterator, List, Tuple

# e0: at most two b's; e: anything; e1: an odd number (at least three) of b's;
# e2: even length.
EXAMPLE_PATTERN = (
    r"a*(?:ba*)?(?:ba*)?((?:a|b)*)a*ba*ba*ba*(?:ba*ba*)*\1(?:(?:a|b)(?:a|b))*"
)
EXAMPLE_SUBJECT = "abbabbabbabba"
MISSISSIMISS = "mississimiss"

BINARY_ALPHABET = "ab"

CORPUS: Tuple[str, ...] = (
    EXAMPLE_PATTERN,
    r"((?:a|b)+)\1",
    r"((?:a|b)*)\1",
    r"(a)b\1",
    r"(a*)\1",
    r"(a|)b*\1",
    r"()a*\1",
    r"((?:ab)+a?)x?\1",
    r"(?:a|b)*((?:a|b)+)\1(?:a|b)*",
    r"a*((?:ab)*)b\1a*",
    r"(b+)a\1",
    r"((?:a|b)(?:a|b))(?:a|b)*\1",
    r".*(a+b).*\1.*",
    r"((?:aa|b)*)a?\1b*",
    r"(.).\1",
    r"((?:a|b)?)(?:ab)*\1",
    r"(?:ab|ba)*((?:a|b)*b)(?:a|b)*\1a*",
    r"((?:a|b)+)(?:a|b)\1",
    r"a*b*((?:ab|b)+)\1(?:ba)*",
    r"([ab]+)[ab]*\1",
    r"([^b]*)b\1",
    r"(?:a|b)?((?:ba)*)\1(?:a|b)?",
    r"((?:a|b)*a)b*\1b",
    r"(abba|ab)(?:a|b)*\1",
)


def random_subject(rng: random.Random, max_length: int, alphabet: str = BINARY_ALPHABET) -> str:
    length = rng.randint(0, max_length)
    return "".join(rng.choice(alphabet) for _ in range(length))


def random_instances(
    seed: int, count: int, max_length: int, patterns: Tuple[str, ...] = CORPUS
) -> Iterator[Tuple[int, str, str]]:
    """Yield ``(number, pattern, subject)``; pattern k of the corpus gets every k-th instance."""
    rng = random.Random(seed)
    for number in range(count):
        yield number, patterns[number % len(patterns)], random_subject(rng, max_length)


def family_subject(seed_word: str, n: int) -> str:
    """``seed_word`` repeated and cut to length n, e.g. ``abb`` -> (abb)^k."""
    if not seed_word:
        raise ValueError("family seed word must be nonempty")
    repeats = -(-n // len(seed_word))
    return (seed_word * repeats)[:n]


def batches(items: List[Tuple[int, str, str]], workers: int) -> List[List[Tuple[int, str, str]]]:
    """Split ``items`` round-robin into at most ``workers`` nonempty batches."""
    groups = [items[k::workers] for k in range(max(1, workers))]
    return [group for group in groups if group]
