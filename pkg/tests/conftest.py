import random

import pytest

from smoncat.algebra import Quiver, Relation, build_algebra, path_from_arrows
from smoncat.fields import QQ


def loop_algebra(n, field=QQ):
    """k[x]/(x^n) as a one-vertex quiver with a loop."""
    q = Quiver(["v"], [("x", "v", "v")])
    rel = Relation([(field.one, path_from_arrows(q, ["x"] * n))])
    return build_algebra(q, [rel], field)


def linear_an(n, field=QQ):
    """Path algebra of linear A_n: 1 -> 2 -> ... -> n, no relations."""
    verts = [str(i) for i in range(1, n + 1)]
    arrows = [(f"a{i}", str(i), str(i + 1)) for i in range(1, n)]
    return build_algebra(Quiver(verts, arrows), [], field)


def cluster_tilted(field=QQ):
    """The cluster-tilted algebra with a 3-cycle 2->3->4->2 (all consecutive
    pairs zero) and an extra arrow 2->1."""
    q = Quiver(
        ["1", "2", "3", "4"],
        [("alpha", "2", "1"), ("beta", "2", "3"), ("gamma", "3", "4"), ("delta", "4", "2")],
    )
    rels = [
        Relation([(field.one, path_from_arrows(q, ["delta", "beta"]))]),
        Relation([(field.one, path_from_arrows(q, ["gamma", "delta"]))]),
        Relation([(field.one, path_from_arrows(q, ["beta", "gamma"]))]),
    ]
    return build_algebra(q, rels, field)


@pytest.fixture
def kx2():
    return loop_algebra(2)


@pytest.fixture
def kx3():
    return loop_algebra(3)


@pytest.fixture
def a2():
    return linear_an(2)


@pytest.fixture
def a3():
    return linear_an(3)


@pytest.fixture
def ct():
    return cluster_tilted()


@pytest.fixture
def rng():
    return random.Random(20240817)
