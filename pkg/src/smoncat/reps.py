"""Representations of a bound quiver algebra and their morphisms.

Column convention: a representation assigns to each arrow a: u -> v a matrix
of shape (dim_v x dim_u) acting on column vectors from the left. Every Rep
constructor re-checks the relations; every ModMap constructor re-checks the
intertwining law. Both are cheap at desk scale and catch bugs early.
"""

from .algebra import Path
from .errors import ShapeError
from .matrix import Mat, block_diag, hstack, image_basis, inverse, kernel_basis, quotient_maps, rank, solve, vstack


class Rep:
    __slots__ = ("algebra", "dims", "mats", "_key")

    def __init__(self, algebra, dims, mats, check=True):
        self.algebra = algebra
        q = algebra.quiver
        self.dims = {v: int(dims.get(v, 0)) for v in q.vertices}
        self.mats = {}
        for a in q.arrows:
            m = mats.get(a.name)
            if m is None:
                m = Mat.zeros(algebra.field, self.dims[a.target], self.dims[a.source])
            if m.rows != self.dims[a.target] or m.cols != self.dims[a.source]:
                raise ShapeError(
                    f"arrow {a.name}: matrix is {m.rows}x{m.cols}, expected "
                    f"{self.dims[a.target]}x{self.dims[a.source]}"
                )
            self.mats[a.name] = m
        self._key = None
        if check:
            self.check_relations()

    def check_relations(self):
        f = self.algebra.field
        for rel in self.algebra.relations:
            acc = Mat.zeros(f, self.dims[rel.target], self.dims[rel.source])
            for c, p in rel.terms:
                acc = acc.add(self.act_path(p).scale(c))
            if not acc.is_zero():
                raise ShapeError(f"relation {[p.label() for _, p in rel.terms]} not satisfied")

    def act_path(self, p):
        """Matrix of the path action dims[source] -> dims[target]."""
        m = Mat.identity(self.algebra.field, self.dims[p.source])
        for a in p.arrows:
            m = self.mats[a].mul(m)
        return m

    @property
    def total_dim(self):
        return sum(self.dims.values())

    def dims_vec(self):
        return tuple(self.dims[v] for v in self.algebra.quiver.vertices)

    def is_zero(self):
        return self.total_dim == 0

    def key(self):
        if self._key is None:
            self._key = (
                self.dims_vec(),
                tuple(self.mats[a.name].key() for a in self.algebra.quiver.arrows),
            )
        return self._key

    @classmethod
    def zero(cls, algebra):
        return cls(algebra, {}, {}, check=False)

    def __repr__(self):
        dims = ",".join(f"{v}:{d}" for v, d in self.dims.items() if d)
        return f"Rep({dims or '0'})"


class ModMap:
    __slots__ = ("source", "target", "mats")

    def __init__(self, source, target, mats, check=True):
        if source.algebra is not target.algebra:
            raise ShapeError("morphism between representations of different algebras")
        self.source = source
        self.target = target
        q = source.algebra.quiver
        self.mats = {}
        for v in q.vertices:
            m = mats.get(v)
            if m is None:
                m = Mat.zeros(source.algebra.field, target.dims[v], source.dims[v])
            if m.rows != target.dims[v] or m.cols != source.dims[v]:
                raise ShapeError(f"vertex {v}: map is {m.rows}x{m.cols}")
            self.mats[v] = m
        if check:
            for a in q.arrows:
                lhs = target.mats[a.name].mul(self.mats[a.source])
                rhs = self.mats[a.target].mul(source.mats[a.name])
                if not lhs.__eq__(rhs):
                    raise ShapeError(f"map does not intertwine arrow {a.name}")

    @classmethod
    def identity(cls, rep):
        f = rep.algebra.field
        return cls(rep, rep, {v: Mat.identity(f, rep.dims[v]) for v in rep.dims}, check=False)

    @classmethod
    def zero_map(cls, source, target):
        return cls(source, target, {}, check=False)

    def __matmul__(self, other):
        """Composition self after other."""
        if other.target is not self.source and other.target.key() != self.source.key():
            raise ShapeError("composition through unequal middle representations")
        return ModMap(
            other.source,
            self.target,
            {v: self.mats[v].mul(other.mats[v]) for v in self.mats},
            check=False,
        )

    def add(self, other):
        return ModMap(
            self.source, self.target, {v: self.mats[v].add(other.mats[v]) for v in self.mats}, check=False
        )

    def sub(self, other):
        return ModMap(
            self.source, self.target, {v: self.mats[v].sub(other.mats[v]) for v in self.mats}, check=False
        )

    def scale(self, c):
        return ModMap(self.source, self.target, {v: self.mats[v].scale(c) for v in self.mats}, check=False)

    def neg(self):
        return self.scale(self.source.algebra.field.neg(self.source.algebra.field.one))

    def is_zero(self):
        return all(m.is_zero() for m in self.mats.values())

    def is_injective(self):
        return all(rank(m) == m.cols for m in self.mats.values())

    def is_surjective(self):
        return all(rank(m) == m.rows for m in self.mats.values())

    def is_iso(self):
        return all(m.is_square() for m in self.mats.values()) and all(
            inverse(m) is not None for m in self.mats.values()
        )

    def inverse(self):
        invs = {}
        for v, m in self.mats.items():
            if not m.is_square():
                return None
            mi = inverse(m)
            if mi is None:
                return None
            invs[v] = mi
        return ModMap(self.target, self.source, invs, check=False)

    def vec(self):
        """Flatten to a coefficient list (vertex order, then row-major)."""
        out = []
        for v in self.source.algebra.quiver.vertices:
            for row in self.mats[v].data:
                out.extend(row)
        return out

    def __repr__(self):
        return f"ModMap({self.source!r} -> {self.target!r})"


def map_from_vec(source, target, vec, check=False):
    f = source.algebra.field
    mats = {}
    pos = 0
    for v in source.algebra.quiver.vertices:
        r, c = target.dims[v], source.dims[v]
        mats[v] = Mat(f, r, c, [list(vec[pos + i * c : pos + (i + 1) * c]) for i in range(r)])
        pos += r * c
    return ModMap(source, target, mats, check=check)


def hom_basis(m, n):
    """A basis of Hom(m, n) from one linear system over all vertices and arrows."""
    f = m.algebra.field
    q = m.algebra.quiver
    offs = {}
    nvars = 0
    for v in q.vertices:
        offs[v] = nvars
        nvars += n.dims[v] * m.dims[v]
    if nvars == 0:
        return []

    rows = []
    for a in q.arrows:
        u, w = a.source, a.target
        Xa, Ya = m.mats[a.name], n.mats[a.name]
        for i in range(n.dims[w]):
            for j in range(m.dims[u]):
                row = [f.zero] * nvars
                for k in range(n.dims[u]):  # (Ya @ H_u)[i][j]
                    c = Ya.data[i][k]
                    if c != f.zero:
                        row[offs[u] + k * m.dims[u] + j] = f.add(row[offs[u] + k * m.dims[u] + j], c)
                for k in range(m.dims[w]):  # -(H_w @ Xa)[i][j]
                    c = Xa.data[k][j]
                    if c != f.zero:
                        idx = offs[w] + i * m.dims[w] + k
                        row[idx] = f.sub(row[idx], c)
                if any(x != f.zero for x in row):
                    rows.append(row)

    if rows:
        ker = kernel_basis(Mat(f, len(rows), nvars, rows))
    else:
        ker = Mat.identity(f, nvars)
    out = []
    for j in range(ker.cols):
        vec = [ker.data[i][j] for i in range(nvars)]
        out.append(map_from_vec(m, n, vec))
    return out


def solve_hom(source, target, post=(), pre=()):
    """A module map H: source -> target with A @ H = B for (A, B) in post and
    H @ C = D for (C, D) in pre, or None. The intertwining law is part of the
    system, so the result is always a genuine ModMap."""
    f = source.algebra.field
    q = source.algebra.quiver
    offs = {}
    nvars = 0
    for v in q.vertices:
        offs[v] = nvars
        nvars += target.dims[v] * source.dims[v]

    rows, rhs = [], []

    def emit(row, b):
        rows.append(row)
        rhs.append([b])

    for a in q.arrows:
        u, w = a.source, a.target
        Xa, Ya = source.mats[a.name], target.mats[a.name]
        for i in range(target.dims[w]):
            for j in range(source.dims[u]):
                row = [f.zero] * nvars
                for k in range(target.dims[u]):
                    c = Ya.data[i][k]
                    if c != f.zero:
                        row[offs[u] + k * source.dims[u] + j] = f.add(
                            row[offs[u] + k * source.dims[u] + j], c
                        )
                for k in range(source.dims[w]):
                    c = Xa.data[k][j]
                    if c != f.zero:
                        idx = offs[w] + i * source.dims[w] + k
                        row[idx] = f.sub(row[idx], c)
                emit(row, f.zero)

    for A, B in post:  # A: target -> Z, B: source -> Z, want A H = B
        for v in q.vertices:
            Av, Bv = A.mats[v], B.mats[v]
            for i in range(Av.rows):
                for j in range(source.dims[v]):
                    row = [f.zero] * nvars
                    for k in range(target.dims[v]):
                        c = Av.data[i][k]
                        if c != f.zero:
                            row[offs[v] + k * source.dims[v] + j] = c
                    emit(row, Bv.data[i][j])

    for C, D in pre:  # C: Z -> source, D: Z -> target, want H C = D
        for v in q.vertices:
            Cv, Dv = C.mats[v], D.mats[v]
            for i in range(target.dims[v]):
                for j in range(Cv.cols):
                    row = [f.zero] * nvars
                    for k in range(source.dims[v]):
                        c = Cv.data[k][j]
                        if c != f.zero:
                            row[offs[v] + i * source.dims[v] + k] = c
                    emit(row, Dv.data[i][j])

    if nvars == 0:
        consistent = all(b[0] == f.zero for b in rhs)
        return ModMap.zero_map(source, target) if consistent else None
    sol = solve(Mat(f, len(rows), nvars, rows), Mat(f, len(rows), 1, rhs))
    if sol is None:
        return None
    return map_from_vec(source, target, [sol.data[i][0] for i in range(nvars)])


def lift_left(A, B):
    """H with A o H = B (lift B through the 'surjection' A)."""
    return solve_hom(B.source, A.source, post=[(A, B)])


def lift_right(C, D):
    """H with H o C = D (extend D along the 'injection' C)."""
    return solve_hom(C.target, D.target, pre=[(C, D)])


def _induced_on_sub(parent, bases):
    """Arrow matrices induced on an arrow-stable family of column subspaces."""
    mats = {}
    for a in parent.algebra.quiver.arrows:
        img = parent.mats[a.name].mul(bases[a.source])
        got = solve(bases[a.target], img)
        if got is None:
            raise ShapeError(f"subspace not stable under arrow {a.name}")
        mats[a.name] = got
    return mats


def sub_rep(parent, bases):
    """Subrepresentation spanned by columns of bases[v], with its inclusion."""
    dims = {v: bases[v].cols for v in bases}
    rep = Rep(parent.algebra, dims, _induced_on_sub(parent, bases))
    incl = ModMap(rep, parent, bases)
    return rep, incl


def quotient_rep(parent, bases):
    """Quotient by the subrepresentation spanned by bases[v], with projection."""
    f = parent.algebra.field
    projs, sections = {}, {}
    for v, b in bases.items():
        p, s = quotient_maps(b, parent.dims[v])
        projs[v], sections[v] = p, s
    mats = {}
    for a in parent.algebra.quiver.arrows:
        mats[a.name] = projs[a.target].mul(parent.mats[a.name]).mul(sections[a.source])
    rep = Rep(parent.algebra, {v: projs[v].rows for v in projs}, mats)
    proj = ModMap(parent, rep, projs)
    return rep, proj


def kernel(f):
    bases = {v: kernel_basis(f.mats[v]) for v in f.mats}
    return sub_rep(f.source, bases)


def image(f):
    bases = {v: image_basis(f.mats[v]) for v in f.mats}
    return sub_rep(f.target, bases)


def cokernel(f):
    bases = {v: image_basis(f.mats[v]) for v in f.mats}
    return quotient_rep(f.target, bases)


def direct_sum(reps):
    """Block-diagonal sum with canonical injections and projections."""
    reps = list(reps)
    if not reps:
        raise ShapeError("direct_sum of nothing needs an algebra; use Rep.zero")
    alg = reps[0].algebra
    f = alg.field
    dims = {v: sum(r.dims[v] for r in reps) for v in alg.quiver.vertices}
    mats = {
        a.name: block_diag(f, [r.mats[a.name] for r in reps]) for a in alg.quiver.arrows
    }
    total = Rep(alg, dims, mats, check=False)
    injs, projs = [], []
    offs = {v: 0 for v in dims}
    for r in reps:
        imats, pmats = {}, {}
        for v in dims:
            inj = Mat.zeros(f, dims[v], r.dims[v])
            prj = Mat.zeros(f, r.dims[v], dims[v])
            for i in range(r.dims[v]):
                inj.data[offs[v] + i][i] = f.one
                prj.data[i][offs[v] + i] = f.one
            imats[v], pmats[v] = inj, prj
        injs.append(ModMap(r, total, imats, check=False))
        projs.append(ModMap(total, r, pmats, check=False))
        for v in dims:
            offs[v] += r.dims[v]
    return total, injs, projs


def radical(m):
    """J(Lambda)-submodule: at v, the span of images of incoming arrows."""
    f = m.algebra.field
    bases = {}
    for v in m.algebra.quiver.vertices:
        incoming = [m.mats[a.name] for a in m.algebra.quiver.arrows_to[v]]
        stacked = hstack(f, incoming, rows=m.dims[v]) if incoming else Mat.zeros(f, m.dims[v], 0)
        bases[v] = image_basis(stacked)
    return sub_rep(m, bases)


def socle(m):
    """Largest semisimple submodule: at v, the joint kernel of outgoing arrows."""
    f = m.algebra.field
    bases = {}
    for v in m.algebra.quiver.vertices:
        outgoing = [m.mats[a.name] for a in m.algebra.quiver.arrows_from[v]]
        stacked = vstack(f, outgoing, cols=m.dims[v]) if outgoing else Mat.zeros(f, 0, m.dims[v])
        bases[v] = kernel_basis(stacked)
    return sub_rep(m, bases)


def top(m):
    """m / rad m with its projection."""
    bases = {
        v: image_basis(
            hstack(m.algebra.field, [m.mats[a.name] for a in m.algebra.quiver.arrows_to[v]], rows=m.dims[v])
        )
        for v in m.dims
    }
    return quotient_rep(m, bases)


def simple(algebra, v):
    return Rep(algebra, {v: 1}, {}, check=True)


class ProjSum:
    """An explicit direct sum of path-basis projectives P_v with coordinates
    indexed by (summand, basis path). Used for transpose bookkeeping."""

    def __init__(self, algebra, verts):
        self.algebra = algebra
        self.verts = list(verts)
        q = algebra.quiver
        self.coords = {w: [] for w in q.vertices}
        for i, v in enumerate(self.verts):
            for p in algebra.paths_from(v):
                self.coords[p.target].append((i, p))
        self.coord_index = {
            w: {key: pos for pos, key in enumerate(self.coords[w])} for w in q.vertices
        }
        dims = {w: len(self.coords[w]) for w in q.vertices}
        f = algebra.field
        mats = {}
        for a in q.arrows:
            m = Mat.zeros(f, dims[a.target], dims[a.source])
            for col, (i, p) in enumerate(self.coords[a.source]):
                composed = Path(p.source, a.target, p.arrows + (a.name,))
                for c, b in algebra.reduce_path(composed):
                    m.data[self.coord_index[a.target][(i, b)]][col] = c
            mats[a.name] = m
        self.rep = Rep(algebra, dims, mats)

    def generator_coord(self, i):
        """(vertex, position) of the trivial path of summand i."""
        v = self.verts[i]
        return v, self.coord_index[v][(i, Path.trivial(v))]


def standard_proj(algebra, v):
    """Indecomposable projective P_v (paths starting at v)."""
    return ProjSum(algebra, [v]).rep


def dual_rep(m):
    """k-dual as a representation of the opposite algebra."""
    op = m.algebra.opposite()
    mats = {a.name: m.mats[a.name].transpose() for a in m.algebra.quiver.arrows}
    return Rep(op, dict(m.dims), mats)


def dual_map(f):
    """Contravariant k-dual of a morphism."""
    return ModMap(dual_rep(f.target), dual_rep(f.source), {v: f.mats[v].transpose() for v in f.mats})


def standard_inj(algebra, v):
    """Indecomposable injective I_v = D(P_v over the opposite algebra)."""
    return dual_rep(standard_proj(algebra.opposite(), v))


def top_vertices(m):
    """Multiset of vertices of top(m), in quiver vertex order."""
    t, _ = top(m)
    return [v for v in m.algebra.quiver.vertices for _ in range(t.dims[v])]


def socle_vertices(m):
    s, _ = socle(m)
    return [v for v in m.algebra.quiver.vertices for _ in range(s.dims[v])]


def projective_cover(m):
    """The projective cover P(m) ->> m, built from top(m).

    The source is ProjSum(algebra, verts).rep with verts the top vertices in
    quiver order, so callers can reconstruct the block structure.
    """
    alg = m.algebra
    f = alg.field
    bases = {
        v: image_basis(hstack(f, [m.mats[a.name] for a in alg.quiver.arrows_to[v]], rows=m.dims[v]))
        for v in m.dims
    }
    topdims = {}
    sections = {}
    for v in m.dims:
        proj, sec = quotient_maps(bases[v], m.dims[v])
        topdims[v] = proj.rows
        sections[v] = sec
    verts = [v for v in alg.quiver.vertices for _ in range(topdims[v])]
    ps = ProjSum(alg, verts)
    # generator of each summand goes to the chosen top-basis preimage
    gen_target = []
    seen = {v: 0 for v in m.dims}
    for v in verts:
        col = seen[v]
        seen[v] += 1
        gen_target.append(Mat(f, m.dims[v], 1, [[sections[v].data[i][col]] for i in range(m.dims[v])]))
    mats = {}
    for w in alg.quiver.vertices:
        cols = []
        for (i, p) in ps.coords[w]:
            cols.append(m.act_path(p).mul(gen_target[i]))
        mats[w] = hstack(f, cols, rows=m.dims[w]) if cols else Mat.zeros(f, m.dims[w], 0)
    cover = ModMap(ps.rep, m, mats)
    if not cover.is_surjective():
        raise ShapeError("projective cover construction failed to surject")
    return cover


def injective_envelope(m):
    """The injective envelope m >-> I(m), dual to the projective cover."""
    env = dual_map(projective_cover(dual_rep(m)))
    if env.source.key() != m.key():
        raise ShapeError("dual-of-dual mismatch in injective envelope")
    # rebind to the original object so identities compose on the nose
    return ModMap(m, env.target, env.mats, check=False)


def is_projective_vertex_rep(m, v):
    """Cheap check m == P_v on the nose (used only by tests)."""
    return m.key() == standard_proj(m.algebra, v).key()
