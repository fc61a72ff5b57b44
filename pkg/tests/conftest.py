import random

import pytest

from ramsey_stars.core import Coloring


@pytest.fixture
def rng():
    return random.Random(20261016)


def random_coloring(rng, n, t):
    return Coloring(n, t, tuple(rng.randint(1, t) for _ in range(n * (n - 1) // 2)))
