"""Shared test helpers."""
import itertools
import random

from ldegeom import Instance


def random_instance(rng: random.Random, max_side=3, max_coef=12):
    n = rng.randint(1, max_side)
    m = rng.randint(1, max_side)
    return Instance(
        tuple(rng.randint(1, max_coef) for _ in range(n)),
        tuple(rng.randint(1, max_coef) for _ in range(m)),
    )


def corpus(max_total, max_coef):
    """Every instance with ``n + m <= max_total`` and coefficients in ``1..max_coef``."""
    for total in range(2, max_total + 1):
        for n in range(1, total):
            for a in itertools.product(range(1, max_coef + 1), repeat=n):
                for b in itertools.product(range(1, max_coef + 1), repeat=total - n):
                    yield Instance(a, b)

# criterion number -> PASS/FAIL line, filled by test_acceptance and printed by conftest
ACCEPTANCE = {}
