"""Objects of H(C), S(C) and F(C) over a subcategory C, the RSS functors
Cok/Ker, the minimal (mono|epi)morphism constructions, conversion to and from
T2-modules, the cw-split criterion and stable isomorphism tests.

An object is a morphism f: A -> B with A, B in C; it lies in S(C) when f is
injective at every vertex with cokernel in C, dually for F(C). All heavy
lifting (decomposition, isomorphism) happens on the corresponding T2-module.
"""

from .algebra import T2Data
from .decomp import decompose, is_isomorphic
from .errors import NotEpiError, NotMonoError, ShapeError
from .matrix import Mat
from .reps import (
    ModMap,
    Rep,
    cokernel,
    direct_sum,
    hom_basis,
    injective_envelope,
    kernel,
    lift_left,
    lift_right,
    projective_cover,
    solve,
)


class MorObj:
    """A morphism of C viewed as an object of H(C)."""

    def __init__(self, subcat, f, check_membership=True):
        self.subcat = subcat
        self.f = f
        if check_membership:
            subcat.require_member(f.source, "source of H(C)-object")
            subcat.require_member(f.target, "target of H(C)-object")
        self._t2 = None
        self._mono = None
        self._epi = None

    @property
    def source(self):
        return self.f.source

    @property
    def target(self):
        return self.f.target

    @property
    def total_dim(self):
        return self.source.total_dim + self.target.total_dim

    def to_t2(self):
        if self._t2 is None:
            t2 = self.subcat.algebra.t2()
            dims, mats = {}, {}
            for v in self.subcat.algebra.quiver.vertices:
                dims[T2Data.v1(v)] = self.source.dims[v]
                dims[T2Data.v2(v)] = self.target.dims[v]
                mats[T2Data.eps(v)] = self.f.mats[v]
            for a in self.subcat.algebra.quiver.arrows:
                mats[T2Data.a1(a.name)] = self.source.mats[a.name]
                mats[T2Data.a2(a.name)] = self.target.mats[a.name]
            self._t2 = Rep(t2.algebra, dims, mats)
        return self._t2

    @property
    def is_mono_object(self):
        if self._mono is None:
            self._mono = self.f.is_injective() and self.subcat.member(cokernel(self.f)[0])
        return self._mono

    @property
    def is_epi_object(self):
        if self._epi is None:
            self._epi = self.f.is_surjective() and self.subcat.member(kernel(self.f)[0])
        return self._epi

    def key(self):
        return self.to_t2().key()

    def label(self):
        return (self.subcat.label(self.source), self.subcat.label(self.target))

    def __repr__(self):
        src, tgt = self.label()
        return f"Mor({src} -> {tgt})"


def zero_mor(subcat):
    z = Rep.zero(subcat.algebra)
    return MorObj(subcat, ModMap.zero_map(z, z), check_membership=False)


def from_t2(subcat, rep):
    """Inverse of MorObj.to_t2 (bijective translation, roundtrip identity)."""
    base = subcat.algebra
    dims1 = {v: rep.dims[T2Data.v1(v)] for v in base.quiver.vertices}
    dims2 = {v: rep.dims[T2Data.v2(v)] for v in base.quiver.vertices}
    m1 = Rep(base, dims1, {a.name: rep.mats[T2Data.a1(a.name)] for a in base.quiver.arrows})
    m2 = Rep(base, dims2, {a.name: rep.mats[T2Data.a2(a.name)] for a in base.quiver.arrows})
    f = ModMap(m1, m2, {v: rep.mats[T2Data.eps(v)] for v in base.quiver.vertices})
    return MorObj(subcat, f)


def direct_sum_mor(subcat, xs):
    xs = list(xs)
    if not xs:
        return zero_mor(subcat)
    src, _, sprojs = direct_sum([x.source for x in xs])
    tgt, tinjs, _ = direct_sum([x.target for x in xs])
    acc = ModMap.zero_map(src, tgt)
    for x, ti, sp in zip(xs, tinjs, sprojs):
        acc = acc.add(ti @ x.f @ sp)
    return MorObj(subcat, acc, check_membership=False)


def mor_parts(x):
    """Indecomposable summands of x as MorObjs (via its T2-module)."""
    d = decompose(x.to_t2(), x.subcat.seed)
    return [from_t2(x.subcat, p) for p in d.parts]


def mor_iso(x, y):
    """Isomorphism test in H(C) = restriction of T2-module isomorphism."""
    return is_isomorphic(x.to_t2(), y.to_t2(), x.subcat.seed)


def cok(x):
    """RSS functor Cok: S(C) -> F(C), (A >-> B) to (B ->> coker)."""
    if not x.is_mono_object:
        raise NotMonoError("Cok needs an object of S(C)")
    _, proj = cokernel(x.f)
    return MorObj(x.subcat, proj)


def ker(x):
    """RSS functor Ker: F(C) -> S(C), (A ->> B) to (ker >-> A)."""
    if not x.is_epi_object:
        raise NotEpiError("Ker needs an object of F(C)")
    _, incl = kernel(x.f)
    return MorObj(x.subcat, incl)


def is_s_injective_part(subcat, x):
    """Is an indecomposable H(C)-object of the injective form (0 -> I) or
    (I = I) with I relative injective?"""
    if x.source.total_dim == 0 and x.target.total_dim > 0:
        return subcat.is_rel_injective(x.target)
    if x.f.is_iso() and x.source.total_dim > 0:
        return subcat.is_rel_injective(x.source)
    return False


def is_f_projective_part(subcat, x):
    """(P -> 0) or (P = P) with P relative projective."""
    if x.target.total_dim == 0 and x.source.total_dim > 0:
        return subcat.is_rel_projective(x.source)
    if x.f.is_iso() and x.source.total_dim > 0:
        return subcat.is_rel_projective(x.source)
    return False


def strip_parts(x, drop):
    """Drop the indecomposable summands matching the predicate; returns
    (stripped MorObj, dropped parts)."""
    parts = mor_parts(x)
    kept = [p for p in parts if not drop(p)]
    dropped = [p for p in parts if drop(p)]
    if len(kept) == len(parts):
        return x, []
    return direct_sum_mor(x.subcat, kept), dropped


def strip_s_injectives(x):
    return strip_parts(x, lambda p: is_s_injective_part(x.subcat, p))


def strip_f_projectives(x):
    return strip_parts(x, lambda p: is_f_projective_part(x.subcat, p))


def stable_iso_S(x, y):
    """Isomorphism in S(C) modulo injective S(C)-summands."""
    return mor_iso(strip_s_injectives(x)[0], strip_s_injectives(y)[0])


def stable_iso_F(x, y):
    """Isomorphism in F(C) modulo projective F(C)-summands."""
    return mor_iso(strip_f_projectives(x)[0], strip_f_projectives(y)[0])


def envelope_extension(subcat, h):
    """The designated inflation e: A -> I used by Mimo.

    Over the full module category e extends the injective envelope of ker(h),
    which already realizes the minimal monomorphism; over a general C it is
    the designated embedding of the source into relative injectives.
    """
    if subcat.is_module_category:
        k, kincl = kernel(h)
        if k.total_dim == 0:
            return ModMap.zero_map(h.source, Rep.zero(subcat.algebra))
        i = injective_envelope(k)
        e = lift_right(kincl, i)
        if e is None:
            raise ShapeError("injective envelope failed to extend")
        return e
    return subcat.embed_into_injectives(h.source)


def mimo_raw(subcat, h, e=None):
    """[h, e]^T : A -> B + I without stripping."""
    if e is None:
        e = envelope_extension(subcat, h)
    big, injs, _ = direct_sum([h.target, e.target])
    f = (injs[0] @ h).add(injs[1] @ e)
    return MorObj(subcat, f)


def mimo(subcat, h, e=None):
    """Minimal monomorphism: [h, e]^T with every injective S(C)-summand
    (forms (0 -> I) and (I = I)) stripped off."""
    raw = mimo_raw(subcat, h, e)
    if not raw.is_mono_object:
        raise ShapeError("mimo candidate is not an inflation with cokernel in C")
    return strip_s_injectives(raw)[0]


def cover_lift(subcat, h):
    """The designated deflation q: P -> B used by Mepi (dual of the envelope
    extension: over the module category q lifts the cover of coker(h))."""
    if subcat.is_module_category:
        c, cproj = cokernel(h)
        if c.total_dim == 0:
            return ModMap.zero_map(Rep.zero(subcat.algebra), h.target)
        cover = projective_cover(c)
        q = lift_left(cproj, cover)
        if q is None:
            raise ShapeError("projective cover failed to lift")
        return q
    return subcat.cover_from_projectives(h.target)


def mepi_raw(subcat, h, q=None):
    if q is None:
        q = cover_lift(subcat, h)
    big, _, projs = direct_sum([h.source, q.source])
    f = (h @ projs[0]).add(q @ projs[1])
    return MorObj(subcat, f)


def mepi(subcat, h, q=None):
    """Minimal epimorphism: [h, q] with projective F(C)-summands stripped."""
    raw = mepi_raw(subcat, h, q)
    if not raw.is_epi_object:
        raise ShapeError("mepi candidate is not a deflation with kernel in C")
    return strip_f_projectives(raw)[0]


def underline_map(x):
    """Stable representative: strip relative projective summands from both
    objects and take the induced component map."""
    a0, incl_a, _, _ = x.subcat.strip_rel_projectives(x.source)
    b0, _, proj_b, _ = x.subcat.strip_rel_projectives(x.target)
    return proj_b @ x.f @ incl_a


def overline_map(x):
    """Costable representative: strip relative injective summands."""
    a0, incl_a, _, _ = x.subcat.strip_rel_injectives(x.source)
    b0, _, proj_b, _ = x.subcat.strip_rel_injectives(x.target)
    return proj_b @ x.f @ incl_a


def htp_solve(a, c, b):
    """Solve c = a o s + t o b for module maps s: B1 -> A1, t: B2 -> A2,
    where a: A1 -> A2, b: B1 -> B2, c: B1 -> A2. Returns (s, t) or None."""
    alg = a.source.algebra
    f = alg.field
    q = alg.quiver
    A1, A2, B1, B2 = a.source, a.target, b.source, b.target
    offs_s, offs_t = {}, {}
    nv = 0
    for v in q.vertices:
        offs_s[v] = nv
        nv += A1.dims[v] * B1.dims[v]
    for v in q.vertices:
        offs_t[v] = nv
        nv += A2.dims[v] * B2.dims[v]

    rows, rhs = [], []

    def intertwine(rep_src, rep_tgt, offs):
        for ar in q.arrows:
            u, w = ar.source, ar.target
            X, Y = rep_src.mats[ar.name], rep_tgt.mats[ar.name]
            for i in range(rep_tgt.dims[w]):
                for j in range(rep_src.dims[u]):
                    row = [f.zero] * nv
                    for k in range(rep_tgt.dims[u]):
                        cc = Y.data[i][k]
                        if cc != f.zero:
                            row[offs[u] + k * rep_src.dims[u] + j] = f.add(
                                row[offs[u] + k * rep_src.dims[u] + j], cc
                            )
                    for k in range(rep_src.dims[w]):
                        cc = X.data[k][j]
                        if cc != f.zero:
                            idx = offs[w] + i * rep_src.dims[w] + k
                            row[idx] = f.sub(row[idx], cc)
                    rows.append(row)
                    rhs.append([f.zero])

    intertwine(B1, A1, offs_s)
    intertwine(B2, A2, offs_t)

    for v in q.vertices:
        av, bv, cv = a.mats[v], b.mats[v], c.mats[v]
        for i in range(A2.dims[v]):
            for j in range(B1.dims[v]):
                row = [f.zero] * nv
                for k in range(A1.dims[v]):  # (a s)[i][j]
                    cc = av.data[i][k]
                    if cc != f.zero:
                        row[offs_s[v] + k * B1.dims[v] + j] = f.add(
                            row[offs_s[v] + k * B1.dims[v] + j], cc
                        )
                for k in range(B2.dims[v]):  # (t b)[i][j]
                    cc = bv.data[k][j]
                    if cc != f.zero:
                        idx = offs_t[v] + i * B2.dims[v] + k
                        row[idx] = f.add(row[idx], cc)
                rows.append(row)
                rhs.append([cv.data[i][j]])

    if nv == 0:
        if all(r[0] == f.zero for r in rhs):
            return ModMap.zero_map(B1, A1), ModMap.zero_map(B2, A2)
        return None
    sol = solve(Mat(f, len(rows), nv, rows), Mat(f, len(rows), 1, rhs))
    if sol is None:
        return None
    vec = [sol.data[i][0] for i in range(nv)]
    from .reps import map_from_vec

    s_len = sum(A1.dims[v] * B1.dims[v] for v in q.vertices)
    s = map_from_vec(B1, A1, vec[:s_len])
    t = map_from_vec(B2, A2, vec[s_len:])
    return s, t


def cw_split_test(a, c, b):
    """Does the cw-gluing of a and b along the connecting map c split?
    True iff c lies in Htp(a, b) = {a s + t b}."""
    return htp_solve(a, c, b) is not None


def glue_cw(subcat, a, c, b):
    """The middle object of the cw-sequence delta_{a,c,b}: the H(C)-object
    (A1 + B1 -> A2 + B2) with matrix [[a, c], [0, b]]."""
    src, _, sprojs = direct_sum([a.source, b.source])
    tgt, tinjs, _ = direct_sum([a.target, b.target])
    f = (tinjs[0] @ a @ sprojs[0]).add(tinjs[0] @ c @ sprojs[1]).add(tinjs[1] @ b @ sprojs[1])
    return MorObj(subcat, f)
