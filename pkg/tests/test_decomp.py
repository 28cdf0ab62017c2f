import pytest

from smoncat.decomp import (
    algebra_radical,
    decompose,
    endo_algebra,
    indec_iso,
    is_isomorphic,
    iso_between,
    split_off,
)
from smoncat.errors import FieldTooSmallError
from smoncat.fields import GF
from smoncat.reps import direct_sum, simple, standard_proj

from conftest import loop_algebra
from test_reps import random_conjugate


def test_endo_dimensions(kx2):
    s = simple(kx2, "v")
    a = standard_proj(kx2, "v")
    assert endo_algebra(s).dim == 1
    e = endo_algebra(a)
    assert e.dim == 2
    ss = direct_sum([s, s])[0]
    assert endo_algebra(ss).dim == 4  # 2x2 matrix algebra


def test_radical(kx2):
    s = simple(kx2, "v")
    a = standard_proj(kx2, "v")
    assert algebra_radical(endo_algebra(s)) == []
    rad_a = algebra_radical(endo_algebra(a))
    assert len(rad_a) == 1  # span of multiplication by x
    ss = direct_sum([s, s])[0]
    assert algebra_radical(endo_algebra(ss)) == []  # semisimple


def test_field_too_small():
    a2 = loop_algebra(2, GF(2))
    reg = standard_proj(a2, "v")
    with pytest.raises(FieldTooSmallError):
        algebra_radical(endo_algebra(reg))


def test_decompose_direct_sum(kx2):
    s = simple(kx2, "v")
    a = standard_proj(kx2, "v")
    m = direct_sum([a, s])[0]
    d = decompose(m)
    assert sorted(p.total_dim for p in d.parts) == [1, 2]
    assert d.iso.inverse() is not None
    grouped = d.grouped()
    assert sorted(mult for _, mult in grouped) == [1, 1]


def test_decompose_conjugate(kx2, rng):
    s = simple(kx2, "v")
    a = standard_proj(kx2, "v")
    m = direct_sum([a, a, s])[0]
    for _ in range(4):
        conj = random_conjugate(m, rng)
        d = decompose(conj)
        assert sorted(p.total_dim for p in d.parts) == [1, 2, 2]
        # uniqueness: multisets agree between two conjugates
        assert sorted(p.dims_vec() for p in d.parts) == sorted(p.dims_vec() for p in decompose(m).parts)


def test_regular_is_indecomposable(kx2, kx3):
    for alg in (kx2, kx3):
        reg = standard_proj(alg, "v")
        d = decompose(reg)
        assert len(d.parts) == 1
        assert d.certificates[0]["indecomposable"]


def test_is_isomorphic(kx2, rng):
    s = simple(kx2, "v")
    a = standard_proj(kx2, "v")
    m = direct_sum([a, s])[0]
    assert is_isomorphic(m, random_conjugate(m, rng))
    ss = direct_sum([s, s])[0]
    assert not is_isomorphic(a, ss)  # same total dimension, different End
    m2 = direct_sum([s, a])[0]  # order of summands irrelevant
    assert is_isomorphic(m, m2)
    iso = iso_between(m, m2)
    assert iso is not None and iso.inverse() is not None


def test_indec_iso(kx2):
    s = simple(kx2, "v")
    a = standard_proj(kx2, "v")
    assert indec_iso(s, s) is not None
    assert indec_iso(s, a) is None


def test_split_off(kx2):
    s = simple(kx2, "v")
    a = standard_proj(kx2, "v")
    m = direct_sum([a, s, a])[0]
    kept, incl, proj, dropped = split_off(m, lambda p: p.total_dim == 1)
    assert kept.total_dim == 1
    assert (proj @ incl).is_iso()
    assert sorted(p.total_dim for p in dropped) == [2, 2]


def test_decompose_a3(a3):
    p1 = standard_proj(a3, "1")
    s2 = simple(a3, "2")
    m = direct_sum([p1, s2, p1])[0]
    d = decompose(m)
    assert sorted(p.dims_vec() for p in d.parts) == sorted([(1, 1, 1), (1, 1, 1), (0, 1, 0)])
