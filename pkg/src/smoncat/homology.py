"""Minimal presentations, duality D, transpose Tr, tau = DTr and its inverse
(on objects and morphisms), Ext^1 with extension realization, syzygies and
stable/costable hom spaces.

Hom(P_v, Lambda) is computed combinatorially on the residue-path basis
(e_v.Lambda as a right module is the opposite-algebra projective on the same
vertex), which keeps the transpose exact and fast.
"""

from dataclasses import dataclass

from .algebra import Path, compose
from .decomp import decompose, indec_iso, split_off
from .errors import InjectiveInputError, ProjectiveInputError, ShapeError
from .matrix import Mat, hstack, image_basis, rref, solve
from .reps import (
    ModMap,
    ProjSum,
    Rep,
    cokernel,
    direct_sum,
    dual_map,
    dual_rep,
    hom_basis,
    injective_envelope,
    kernel,
    lift_left,
    lift_right,
    projective_cover,
    quotient_rep,
    solve_hom,
    standard_inj,
    standard_proj,
    sub_rep,
    top,
)


@dataclass
class MinPresentation:
    """P1 --d--> P0 --aug->> m with both covers minimal; K = ker(aug)."""

    p0: ProjSum
    p1: ProjSum
    d: ModMap
    aug: ModMap
    k: Rep
    k_incl: ModMap
    k_cover: ModMap  # P1 ->> K


_pres_cache = {}


def _cover_with_sum(m):
    """Projective cover realized on an explicit ProjSum (same construction as
    reps.projective_cover, exposing the block structure)."""
    cover = projective_cover(m)
    t, _ = top(m)
    verts = [v for v in m.algebra.quiver.vertices for _ in range(t.dims[v])]
    ps = ProjSum(m.algebra, verts)
    if ps.rep.key() != cover.source.key():
        raise ShapeError("projective cover block structure out of sync")
    return ps, ModMap(ps.rep, m, cover.mats, check=False)


def min_presentation(m):
    key = (id(m.algebra), m.key())
    hit = _pres_cache.get(key)
    if hit is not None:
        return hit
    p0, aug = _cover_with_sum(m)
    k, k_incl = kernel(aug)
    p1, k_cover = _cover_with_sum(k)
    d = k_incl @ k_cover
    pres = MinPresentation(p0, p1, d, aug, k, k_incl, k_cover)
    if len(_pres_cache) > 2048:
        _pres_cache.clear()
    _pres_cache[key] = pres
    return pres


def _extract_elements(d, src, tgt):
    """Write d: src.rep -> tgt.rep between projective sums as a matrix of path
    combinations z[i][j] (paths tgt.verts[j] -> src.verts[i])."""
    f = src.algebra.field
    z = [[[] for _ in tgt.verts] for _ in src.verts]
    for i in range(len(src.verts)):
        v, pos = src.generator_coord(i)
        col = d.mats[v]
        for row, (j, p) in enumerate(tgt.coords[v]):
            c = col.data[row][pos]
            if c != f.zero:
                z[i][j].append((c, p))
    return z


def star_map(d, src, tgt):
    """Hom(-, Lambda) of d: src.rep -> tgt.rep; a map op(tgt) -> op(src)."""
    base = src.algebra
    op = base.opposite()
    op_src = ProjSum(op, src.verts)
    op_tgt = ProjSum(op, tgt.verts)
    z = _extract_elements(d, src, tgt)
    f = base.field
    mats = {}
    for w in op.quiver.vertices:
        mat = Mat.zeros(f, len(op_src.coords[w]), len(op_tgt.coords[w]))
        for col, (j, q) in enumerate(op_tgt.coords[w]):
            for i in range(len(src.verts)):
                for c, p in z[i][j]:
                    zp = base.op_path(p)  # src.verts[i] -> tgt.verts[j] in op
                    for b, c2 in op.reduce_terms([(f.one, compose(zp, q))]).items():
                        mat.data[op_src.coord_index[w][(i, b)]][col] = f.add(
                            mat.data[op_src.coord_index[w][(i, b)]][col], f.mul(c, c2)
                        )
        mats[w] = mat
    return ModMap(op_tgt.rep, op_src.rep, mats), op_tgt, op_src


@dataclass
class TrData:
    pres: MinPresentation
    dstar: ModMap
    tr: Rep
    tr_proj: ModMap  # opP1 ->> Tr


_tr_cache = {}


def transpose_data(m):
    key = (id(m.algebra), m.key())
    hit = _tr_cache.get(key)
    if hit is not None:
        return hit
    pres = min_presentation(m)
    dstar, _, _ = star_map(pres.d, pres.p1, pres.p0)
    tr, tr_proj = cokernel(dstar)
    data = TrData(pres, dstar, tr, tr_proj)
    if len(_tr_cache) > 2048:
        _tr_cache.clear()
    _tr_cache[key] = data
    return data


def transpose_Tr(m):
    return transpose_data(m).tr


_std_cache = {}


def _standard_list(algebra, kind):
    key = (id(algebra), kind)
    if key not in _std_cache:
        make = standard_proj if kind == "proj" else standard_inj
        _std_cache[key] = [make(algebra, v) for v in algebra.quiver.vertices]
    return _std_cache[key]


def is_projective_rep(part):
    """Is this certified-indecomposable rep isomorphic to some P_v?"""
    return any(
        indec_iso(part, p) is not None
        for p in _standard_list(part.algebra, "proj")
        if p.dims_vec() == part.dims_vec()
    )


def is_injective_rep(part):
    return any(
        indec_iso(part, i) is not None
        for i in _standard_list(part.algebra, "inj")
        if i.dims_vec() == part.dims_vec()
    )


def has_projective_summand(m):
    return any(is_projective_rep(p) for p in decompose(m).parts)


def has_injective_summand(m):
    return any(is_injective_rep(p) for p in decompose(m).parts)


def strip_projectives(m):
    """(proj-free part, incl, proj, dropped projective parts)."""
    return split_off(m, lambda p: not is_projective_rep(p))


def strip_injectives(m):
    return split_off(m, lambda p: not is_injective_rep(p))


def tau(m):
    """tau = D Tr; defined only on modules without projective summands."""
    if has_projective_summand(m):
        raise ProjectiveInputError("tau of a module with projective summands")
    return dual_rep(transpose_Tr(m))


def tau_inv(m):
    """tau^- = Tr D; defined only on modules without injective summands."""
    if has_injective_summand(m):
        raise InjectiveInputError("tau^- of a module with injective summands")
    return transpose_Tr(dual_rep(m))


def _tr_morphism(h):
    """Contravariant Tr-level transport Tr(target) -> Tr(source), well defined
    up to maps factoring through projectives."""
    m, n = h.source, h.target
    dm, dn = transpose_data(m), transpose_data(n)
    h0 = lift_left(dn.pres.aug, h @ dm.pres.aug)
    if h0 is None:
        raise ShapeError("could not lift through projective cover")
    into_k = lift_left(dn.pres.k_incl, h0 @ dm.pres.d)
    if into_k is None:
        raise ShapeError("lift does not corestrict to the syzygy")
    h1 = lift_left(dn.pres.k_cover, into_k)
    if h1 is None:
        raise ShapeError("could not lift to the first syzygy cover")
    h1star, _, _ = star_map(h1, dm.pres.p1, dn.pres.p1)
    t = solve_hom(dn.tr, dm.tr, pre=[(dn.tr_proj, dm.tr_proj @ h1star)])
    if t is None:
        raise ShapeError("transpose transport failed to descend")
    return t


def tau_morphism(h):
    """tau applied to a morphism between proj-free modules (stable class)."""
    if has_projective_summand(h.source) or has_projective_summand(h.target):
        raise ProjectiveInputError("tau_morphism needs proj-free endpoints")
    return dual_map(_tr_morphism(h))


def tau_inv_morphism(h):
    if has_injective_summand(h.source) or has_injective_summand(h.target):
        raise InjectiveInputError("tau_inv_morphism needs inj-free endpoints")
    return _tr_morphism(dual_map(h))


class HomQuotient:
    """Hom(m, n) modulo a designated subspace, with membership tests."""

    def __init__(self, m, n, sub_maps):
        self.m, self.n = m, n
        self.basis = hom_basis(m, n)
        f = m.algebra.field
        self.field = f
        vecs = [b.vec() for b in self.basis]
        nrows = len(vecs[0]) if vecs else 0
        self._coord = Mat(f, nrows, len(vecs), [[vecs[j][i] for j in range(len(vecs))] for i in range(nrows)])
        sub_coords = [self._expand(s) for s in sub_maps]
        if sub_coords:
            sm = Mat(f, len(sub_coords), len(self.basis), sub_coords)
            self._sub_rref, self._sub_pivots = rref(sm)
        else:
            self._sub_rref, self._sub_pivots = None, []
        self._pivot_set = set(self._sub_pivots)

    def _expand(self, g):
        sol = solve(self._coord, Mat.column(self.field, g.vec()))
        if sol is None:
            raise ShapeError("map does not lie in the hom space")
        return [sol.data[i][0] for i in range(len(self.basis))]

    def reduce_coords(self, g):
        """Canonical coordinates of the class of g (sub-pivot slots zeroed)."""
        f = self.field
        v = self._expand(g)
        if self._sub_rref is not None:
            for r, c in enumerate(self._sub_pivots):
                if v[c] != f.zero:
                    coef = v[c]
                    row = self._sub_rref.data[r]
                    v = [f.sub(x, f.mul(coef, y)) for x, y in zip(v, row)]
        return v

    def contains(self, g):
        return all(x == self.field.zero for x in self.reduce_coords(g))

    def class_reps(self):
        """Hom-basis elements spanning a complement of the subspace."""
        return [self.basis[i] for i in range(len(self.basis)) if i not in self._pivot_set]

    @property
    def quotient_dim(self):
        return len(self.basis) - len(self._sub_pivots)


def stable_hom(m, n):
    """Hom(m, n) modulo maps factoring through projectives."""
    pres = min_presentation(n)
    through = [pres.aug @ g for g in hom_basis(m, pres.p0.rep)]
    return HomQuotient(m, n, through)


def costable_hom(m, n):
    """Hom(m, n) modulo maps factoring through injectives."""
    env = injective_envelope(m)
    through = [g @ env for g in hom_basis(env.target, n)]
    return HomQuotient(m, n, through)


def factors_through_projective(f):
    """Does f factor through the projective cover of its target?"""
    return lift_left(min_presentation(f.target).aug, f) is not None


def factors_through_injective(f):
    return lift_right(injective_envelope(f.source), f) is not None


class ExtClass:
    """An Ext^1 class as a cocycle Omega(m) -> n, lazily realizable."""

    def __init__(self, m, n, cocycle, pres):
        self.m, self.n = m, n
        self.cocycle = cocycle
        self.pres = pres

    def realize(self):
        return realize_extension(self.pres, self.cocycle, self.m, self.n)


def ext1_quotient(m, n):
    """Hom(Omega m, n) modulo restrictions from P0; its dim is dim Ext^1(m,n)."""
    pres = min_presentation(m)
    sub = [g @ pres.k_incl for g in hom_basis(pres.p0.rep, n)]
    return pres, HomQuotient(pres.k, n, sub)


def ext1_basis(m, n):
    pres, hq = ext1_quotient(m, n)
    return [ExtClass(m, n, rep, pres) for rep in hq.class_reps()]


def ext1_dim(m, n):
    _, hq = ext1_quotient(m, n)
    return hq.quotient_dim


def realize_extension(pres, cocycle, m, n):
    """Pushout realization 0 -> n -> E -> m -> 0 of a cocycle Omega(m) -> n."""
    f = m.algebra.field
    big, injs, projs = direct_sum([n, pres.p0.rep])
    graph = (injs[0] @ cocycle).add((injs[1] @ pres.k_incl).neg())
    bases = {v: image_basis(graph.mats[v]) for v in big.dims}
    e_rep, proj = quotient_rep(big, bases)
    left = proj @ injs[0]
    full = pres.aug @ projs[1]
    right = solve_hom(e_rep, m, pre=[(proj, full)])
    if right is None:
        raise ShapeError("extension realization failed to descend")
    if not left.is_injective() or not right.is_surjective():
        raise ShapeError("realized extension is not exact at the ends")
    if not (right @ left).is_zero():
        raise ShapeError("realized extension does not compose to zero")
    if e_rep.total_dim != m.total_dim + n.total_dim:
        raise ShapeError("realized extension has the wrong dimension")
    return left, right, e_rep


def ext_action_by_endo(pres, rho):
    """Omega(rho): the syzygy-level endomorphism induced by rho in End(m),
    used for the right End(m)-action on Ext^1(m, -) by precomposition."""
    rho0 = lift_left(pres.aug, rho @ pres.aug)
    if rho0 is None:
        raise ShapeError("endomorphism does not lift through the cover")
    omega_rho = lift_left(pres.k_incl, rho0 @ pres.k_incl)
    if omega_rho is None:
        raise ShapeError("lift does not restrict to the syzygy")
    return omega_rho


def syzygy(m):
    """Kernel of the projective cover (minimal syzygy)."""
    return min_presentation(m).k


def cosyzygy(m):
    """Cokernel of the injective envelope (minimal cosyzygy)."""
    c, _ = cokernel(injective_envelope(m))
    return c


def syzygy_morphism(h):
    """Omega(h) by cover lifting; well defined up to projective factoring."""
    pm, pn = min_presentation(h.source), min_presentation(h.target)
    h0 = lift_left(pn.aug, h @ pm.aug)
    if h0 is None:
        raise ShapeError("syzygy transport: cover lift failed")
    t = lift_left(pn.k_incl, h0 @ pm.k_incl)
    if t is None:
        raise ShapeError("syzygy transport: restriction failed")
    return t


def cosyzygy_morphism(h):
    """Omega^{-1}(h) by envelope lifting; well defined up to injective factoring."""
    em, en = injective_envelope(h.source), injective_envelope(h.target)
    cm, pm = cokernel(em)
    cn, pn = cokernel(en)
    hhat = lift_right(em, en @ h)
    if hhat is None:
        raise ShapeError("cosyzygy transport: envelope lift failed")
    t = solve_hom(cm, cn, pre=[(pm, pn @ hhat)])
    if t is None:
        raise ShapeError("cosyzygy transport: descent failed")
    return t
