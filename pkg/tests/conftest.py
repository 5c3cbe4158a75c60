import random
from fractions import Fraction

import pytest


@pytest.fixture
def rng():
    return random.Random(20240817)


def random_lambdas(rng, height=20, denom=None):
    """Three distinct rationals, none 0 or 1, numerators bounded by height."""
    denom = denom or max(2, height // 4)
    out = []
    while len(out) < 3:
        v = Fraction(rng.randint(-height, height), rng.randint(1, denom))
        if v not in out and v not in (0, 1):
            out.append(v)
    return tuple(out)
