import random
from fractions import Fraction

import pytest

from smoncat.errors import ShapeError
from smoncat.fields import GF, QQ
from smoncat.matrix import (
    Mat,
    hstack,
    image_basis,
    inverse,
    kernel_basis,
    quotient_maps,
    rank,
    rref,
    solve,
    vstack,
)


def M(rows, field=QQ):
    return Mat.from_rows(field, rows)


def test_rref_identity_and_zero():
    eye = Mat.identity(QQ, 2)
    R, piv = rref(eye)
    assert R == eye and piv == [0, 1]
    z = Mat.zeros(QQ, 3, 2)
    R, piv = rref(z)
    assert R == z and piv == []


def test_rref_rank_one_case():
    # hand Gaussian elimination: [[1,2],[2,4]] -> [[1,2],[0,0]]
    R, piv = rref(M([[1, 2], [2, 4]]))
    assert R == M([[1, 2], [0, 0]])
    assert piv == [0]


def test_rref_idempotent_on_random():
    rng = random.Random(7)
    for _ in range(25):
        r, c = rng.randint(0, 4), rng.randint(0, 4)
        m = M([[rng.randint(-3, 3) for _ in range(c)] for _ in range(r)]) if r else Mat.zeros(QQ, 0, c)
        R1, p1 = rref(m)
        R2, p2 = rref(R1)
        assert R1 == R2 and p1 == p2


def test_kernel_of_zero_map_is_identity():
    k = kernel_basis(Mat.zeros(QQ, 2, 3))
    assert k.cols == 3 and rank(k) == 3


def test_solve_identity_returns_rhs():
    b = M([[1], [7]])
    assert solve(Mat.identity(QQ, 2), b) == b


def test_kernel_over_f2():
    # kernel of [1 1] over F_2 is spanned by (1,1)^t; enumerate F_2^2 agrees
    f2 = GF(2)
    m = Mat.from_rows(f2, [[1, 1]])
    k = kernel_basis(m)
    assert k.cols == 1
    assert [k.data[0][0], k.data[1][0]] == [1, 1]
    solutions = [
        (x, y) for x in (0, 1) for y in (0, 1) if (x + y) % 2 == 0 and (x, y) != (0, 0)
    ]
    assert solutions == [(1, 1)]


def test_rank_nullity_random():
    rng = random.Random(11)
    for _ in range(40):
        r, c = rng.randint(0, 5), rng.randint(0, 5)
        rows = [[Fraction(rng.randint(-4, 4)) for _ in range(c)] for _ in range(r)]
        m = Mat(QQ, r, c, rows)
        assert rank(m) + kernel_basis(m).cols == c


def test_solve_soundness_random():
    rng = random.Random(13)
    for _ in range(40):
        r, c = rng.randint(1, 5), rng.randint(1, 5)
        m = M([[rng.randint(-3, 3) for _ in range(c)] for _ in range(r)])
        b = M([[rng.randint(-3, 3)] for _ in range(r)])
        x = solve(m, b)
        if x is not None:
            assert m.mul(x) == b


def test_inverse():
    m = M([[2, 1], [1, 1]])
    mi = inverse(m)
    assert m.mul(mi) == Mat.identity(QQ, 2)
    assert inverse(M([[1, 2], [2, 4]])) is None
    assert inverse(Mat.zeros(QQ, 2, 3)) is None


def test_shape_mismatch_raises():
    with pytest.raises(ShapeError):
        M([[1, 2]]).mul(M([[1, 2]]))
    with pytest.raises(ShapeError):
        solve(M([[1], [2]]), M([[1]]))


def test_quotient_maps():
    sub = M([[1], [1], [0]])
    proj, sec = quotient_maps(sub, 3)
    assert proj.rows == 2 and proj.mul(sub).is_zero()
    assert proj.mul(sec) == Mat.identity(QQ, 2)


def test_stacks_and_blocks():
    a = M([[1, 2]])
    b = M([[3, 4]])
    assert hstack(QQ, [a, b]) == M([[1, 2, 3, 4]])
    assert vstack(QQ, [a, b]) == M([[1, 2], [3, 4]])


def test_zero_dim_matrices():
    e = Mat.zeros(QQ, 0, 3)
    assert rank(e) == 0 and kernel_basis(e).cols == 3
    e2 = Mat.zeros(QQ, 3, 0)
    assert kernel_basis(e2).cols == 0
    assert e2.mul(Mat.zeros(QQ, 0, 2)).rows == 3
