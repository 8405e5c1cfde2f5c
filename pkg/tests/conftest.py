import random

import pytest

from knotmut.diagram import BraidWord, braid_closure


def random_braid(rng: random.Random, max_strands: int = 4,
                 max_letters: int = 10) -> BraidWord:
    n = rng.randint(2, max_strands)
    k = rng.randint(1, max_letters)
    letters = tuple(rng.choice([1, -1]) * rng.randint(1, n - 1)
                    for _ in range(k))
    return BraidWord(n, letters)


def random_knot_braid(rng: random.Random, max_strands: int = 4,
                      max_letters: int = 10) -> BraidWord:
    """Random braid whose closure is a knot (single component)."""
    for _ in range(500):
        b = random_braid(rng, max_strands, max_letters)
        if b.component_count() == 1:
            return b
    raise RuntimeError("failed to sample a knot braid")


def random_knot_diagram(rng: random.Random, max_strands: int = 4,
                        max_letters: int = 10):
    return braid_closure(random_knot_braid(rng, max_strands, max_letters))


@pytest.fixture
def rng():
    return random.Random(20260823)
