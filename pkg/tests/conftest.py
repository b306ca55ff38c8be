from __future__ import annotations

import random

import pytest

from rootmult import Leaf, Node, SerreQuotient, rank3_chain


@pytest.fixture(scope="session")
def chain12():
    return rank3_chain(1, 2)


@pytest.fixture(scope="session")
def chain11():
    return rank3_chain(1, 1)


@pytest.fixture(scope="session")
def chain22():
    return rank3_chain(2, 2)


@pytest.fixture(scope="session")
def engine12(chain12):
    return SerreQuotient(chain12)


def random_expr(rng: random.Random, length: int, rank: int = 3):
    """Uniform-ish random bracket expression with the given leaf count."""
    if length == 1:
        return Leaf(rng.randint(1, rank))
    split = rng.randint(1, length - 1)
    return Node(random_expr(rng, split, rank), random_expr(rng, length - split, rank))
