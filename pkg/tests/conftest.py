import random
from fractions import Fraction

import pytest
from hypothesis import settings

from quivercy import PathVector, Quiver, RelationSet

settings.register_profile("ci", derandomize=True, max_examples=60, deadline=None)
settings.load_profile("ci")


@pytest.fixture
def jordan():
    """One vertex, two loops x, y."""
    return Quiver(["1"], [("x", "1", "1"), ("y", "1", "1")])


@pytest.fixture
def jordan_preprojective(jordan):
    xy = PathVector.unit(jordan, jordan.path(["x", "y"]))
    yx = PathVector.unit(jordan, jordan.path(["y", "x"]))
    return jordan, RelationSet.from_generators(jordan, [("r", xy - yx)])


@pytest.fixture
def three_loop():
    return Quiver(["1"], [("x", "1", "1"), ("y", "1", "1"), ("z", "1", "1")])


@pytest.fixture
def three_loop_commutative(three_loop):
    q = three_loop

    def pv(*names):
        return PathVector.unit(q, q.path(list(names)))

    rels = RelationSet.from_generators(
        q,
        [
            ("rx", pv("y", "z") - pv("z", "y")),
            ("ry", pv("z", "x") - pv("x", "z")),
            ("rz", pv("x", "y") - pv("y", "x")),
        ],
    )
    return q, rels


@pytest.fixture
def a2():
    return Quiver(["1", "2"], [("a", "1", "2")])


def random_vector(rng: random.Random, quiver: Quiver, max_degree: int,
                  terms: int = 3) -> PathVector:
    """Deterministic random element with support in degrees <= max_degree."""
    acc = PathVector.zero(quiver)
    for _ in range(terms):
        degree = rng.randint(0, max_degree)
        paths = quiver.enumerate_paths(degree)
        if not paths:
            continue
        path = paths[rng.randrange(len(paths))]
        coeff = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
        acc = acc + PathVector.unit(quiver, path, coeff)
    return acc


def random_block_vector(rng: random.Random, quiver: Quiver, degree: int,
                        terms: int = 2) -> PathVector | None:
    """Random homogeneous vector with common endpoints, or None."""
    by_block = {}
    for p in quiver.enumerate_paths(degree):
        by_block.setdefault((p.source, p.target), []).append(p)
    if not by_block:
        return None
    block = sorted(by_block)[rng.randrange(len(by_block))]
    paths = by_block[block]
    acc = PathVector.zero(quiver)
    for _ in range(terms):
        path = paths[rng.randrange(len(paths))]
        coeff = Fraction(rng.randint(-2, 2))
        acc = acc + PathVector.unit(quiver, path, coeff)
    if acc.is_zero():
        acc = PathVector.unit(quiver, paths[0])
    return acc
