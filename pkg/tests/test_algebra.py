import pytest

from smoncat.algebra import Path, Quiver, Relation, build_algebra, path_from_arrows
from smoncat.errors import NonAdmissibleError, ParseError
from smoncat.fields import QQ

from conftest import cluster_tilted, linear_an, loop_algebra


def test_loop_algebra_basis():
    a = loop_algebra(2)
    assert a.dim == 2
    labels = {p.label() for p in a.basis}
    assert labels == {"e_v", "x"}
    assert a.nilpotency_degree == 2


def test_a2_dimension():
    a = linear_an(2)
    assert a.dim == 3  # e1, e2, a1


def test_cluster_tilted_dimension():
    # 4 idempotents + 4 arrows + the only surviving length-2 path (delta then alpha)
    a = cluster_tilted()
    assert a.dim == 9
    surviving = [p for p in a.basis if len(p) == 2]
    assert [p.arrows for p in surviving] == [("delta", "alpha")]
    assert a.nilpotency_degree == 3


def test_reduction_closed_under_products():
    a = cluster_tilted()
    for p in a.basis:
        for q in a.basis:
            if p.target != q.source:
                continue
            for b in a.multiply(p, q):  # product re-expands inside the basis span
                assert b in a.basis_index


def test_non_admissible_raises():
    q = Quiver(["v"], [("x", "v", "v")])
    with pytest.raises(NonAdmissibleError):
        build_algebra(q, [], QQ, length_cap=12, path_cap=10000)


def test_mixed_length_non_admissible_detected():
    # x^2 - x^3 generates a non-admissible ideal (x^2 is not in it)
    q = Quiver(["v"], [("x", "v", "v")])
    rel = Relation(
        [
            (QQ.one, path_from_arrows(q, ["x", "x"])),
            (QQ.neg(QQ.one), path_from_arrows(q, ["x", "x", "x"])),
        ]
    )
    with pytest.raises(NonAdmissibleError):
        build_algebra(q, [rel], QQ, length_cap=10, path_cap=10000)


def test_opposite_involution():
    a = cluster_tilted()
    op = a.opposite()
    assert op.dim == a.dim
    assert op.opposite() is a
    loop = loop_algebra(2)
    assert loop.opposite().dim == 2


def test_relation_validation():
    q = Quiver(["1", "2"], [("a", "1", "2")])
    with pytest.raises(ParseError):
        Relation([(QQ.one, Path("1", "2", ("a",)))])  # too short
    q2 = Quiver(["1", "2", "3"], [("a", "1", "2"), ("b", "2", "3"), ("c", "1", "3")])
    with pytest.raises(ParseError):
        Relation(
            [
                (QQ.one, path_from_arrows(q2, ["a", "b"])),
                (QQ.one, Path("2", "3", ("b", "b"))),  # not parallel
            ]
        )


def test_t2_dimensions():
    k = build_algebra(Quiver(["v"], []), [], QQ)
    t2k = k.t2().algebra
    assert t2k.dim == 3  # T2(k) is the A2 path algebra

    a = loop_algebra(2)
    t2a = a.t2().algebra
    assert t2a.dim == 3 * a.dim == 6

    # iterating T2 twice on k: commutative square, dim 9
    t2t2k = t2k.t2().algebra
    assert t2t2k.dim == 9

    ct = cluster_tilted()
    assert ct.t2().algebra.dim == 27


def test_admissibility_invariant():
    a = cluster_tilted()
    n = a.nilpotency_degree
    # every path of length n reduces to zero
    for p in a.basis:
        for arr in a.quiver.arrows:
            if p.target == arr.source and len(p) == n - 1:
                assert a.reduce_path(Path(p.source, arr.target, p.arrows + (arr.name,))) == ()
