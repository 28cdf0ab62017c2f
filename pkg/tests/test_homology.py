import pytest

from smoncat.decomp import is_isomorphic
from smoncat.errors import ProjectiveInputError
from smoncat.fields import QQ
from smoncat.homology import (
    cosyzygy,
    cosyzygy_morphism,
    costable_hom,
    ext1_basis,
    ext1_dim,
    factors_through_injective,
    factors_through_projective,
    min_presentation,
    stable_hom,
    syzygy,
    tau,
    tau_inv,
    tau_morphism,
    transpose_Tr,
)
from smoncat.matrix import Mat
from smoncat.reps import ModMap, Rep, direct_sum, hom_basis, injective_envelope, projective_cover, simple, standard_proj


def test_min_presentation_projective(kx2):
    p = standard_proj(kx2, "v")
    pres = min_presentation(p)
    assert pres.p1.rep.is_zero()
    assert pres.aug.is_iso()


def test_min_presentation_simple(kx2):
    s = simple(kx2, "v")
    pres = min_presentation(s)
    # A --x--> A ->> S
    assert pres.p0.rep.dims_vec() == (2,) and pres.p1.rep.dims_vec() == (2,)
    assert pres.k.dims_vec() == (1,)


def test_exactness_bookkeeping(kx2, a3, rng):
    for alg, v in ((kx2, "v"), (a3, "2")):
        m = direct_sum([simple(alg, v), standard_proj(alg, v)])[0]
        pres = min_presentation(m)
        assert pres.k.total_dim == pres.p0.rep.total_dim - m.total_dim


def test_tau_simple_kx2(kx2):
    s = simple(kx2, "v")
    t = tau(s)
    assert is_isomorphic(t, s)  # tau(S) = S over k[x]/x^2


def test_tau_projective_raises(kx2):
    with pytest.raises(ProjectiveInputError):
        tau(standard_proj(kx2, "v"))


def test_tau_a2(a2):
    s1 = simple(a2, "1")
    assert is_isomorphic(tau(s1), simple(a2, "2"))  # AR sequence 0->S2->P1->S1->0


def test_tr_tr_roundtrip(kx3):
    # Tr lands over the opposite algebra; Tr Tr comes back up to isomorphism
    s = simple(kx3, "v")
    tr = transpose_Tr(s)
    assert tr.algebra is kx3.opposite()
    trtr = transpose_Tr(tr)
    assert trtr.algebra is kx3
    assert is_isomorphic(trtr, s)


def test_tau_roundtrip(kx3):
    # the 2-dim module over k[x]/x^3 is neither projective nor injective
    m2 = Rep(kx3, {"v": 2}, {"x": Mat.from_rows(QQ, [[0, 0], [1, 0]])})
    t = tau(m2)
    back = tau_inv(t)
    assert is_isomorphic(back, m2)


def test_tau_morphism_identity(kx2):
    s = simple(kx2, "v")
    t = tau_morphism(ModMap.identity(s))
    assert t.source.dims_vec() == t.target.dims_vec() == (1,)
    assert t.inverse() is not None  # id_S maps to an iso of tau(S)


def test_ext1(kx2):
    s = simple(kx2, "v")
    p = standard_proj(kx2, "v")
    assert ext1_dim(p, s) == 0  # Ext^1(P, -) = 0
    assert ext1_dim(p, p) == 0
    classes = ext1_basis(s, s)
    assert len(classes) == 1
    left, right, middle = classes[0].realize()
    assert is_isomorphic(middle, p)  # the nonsplit extension has middle A
    assert (right @ left).is_zero()


def test_zero_cocycle_realizes_split(kx2):
    s = simple(kx2, "v")
    pres = min_presentation(s)
    from smoncat.homology import realize_extension

    zero = ModMap.zero_map(pres.k, s)
    left, right, middle = realize_extension(pres, zero, s, s)
    assert is_isomorphic(middle, direct_sum([s, s])[0])


def test_syzygies(kx2):
    s = simple(kx2, "v")
    p = standard_proj(kx2, "v")
    assert is_isomorphic(syzygy(s), s)
    assert syzygy(p).is_zero()
    assert is_isomorphic(cosyzygy(s), s)


def test_cosyzygy_morphism(kx3):
    s = simple(kx3, "v")
    t = cosyzygy_morphism(ModMap.identity(s))
    assert t.source.dims_vec() == cosyzygy(s).dims_vec()
    assert t.inverse() is not None


def test_stable_hom(kx2):
    s = simple(kx2, "v")
    p = standard_proj(kx2, "v")
    assert stable_hom(p, s).quotient_dim == 0  # everything from P factors through P
    se = stable_hom(s, s)
    assert se.quotient_dim == 1
    # any endomorphism of S factoring through A is zero here (soc A = rad A),
    # and the zero composite does factor through a projective
    cover = projective_cover(s)
    comp = cover @ hom_basis(s, cover.source)[0]
    assert comp.is_zero()
    assert factors_through_projective(comp)
    assert costable_hom(p, p).quotient_dim == 0  # P = I over k[x]/x^2
    assert factors_through_injective(comp)


def test_ar_pairing_sanity(kx2, kx3, a3):
    # dim Ext^1(m, tau m) >= 1 for indecomposable non-projective m
    cases = [simple(kx2, "v"), simple(kx3, "v"), simple(a3, "1"), simple(a3, "2")]
    for m in cases:
        assert ext1_dim(m, tau(m)) >= 1
