"""Bound quiver algebras kQ/I with computed path bases.

Path convention is diagrammatic throughout: a path stores its arrows in
traversal order (first arrow first), and compose(p, q) means "p then q".
On representations a path acts by multiplying the arrow matrices in reverse
storage order (column vectors, matrices on the left).
"""

from dataclasses import dataclass

from .errors import NonAdmissibleError, ParseError, ShapeError
from .matrix import Mat, rref


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str


class Quiver:
    def __init__(self, vertices, arrows):
        self.vertices = list(vertices)
        self.arrows = [a if isinstance(a, Arrow) else Arrow(*a) for a in arrows]
        if len(set(self.vertices)) != len(self.vertices):
            raise ParseError("duplicate vertex names")
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise ParseError("duplicate arrow names")
        vset = set(self.vertices)
        for a in self.arrows:
            if a.source not in vset or a.target not in vset:
                raise ParseError(f"arrow {a.name} has undeclared endpoint")
        self.arrow_by_name = {a.name: a for a in self.arrows}
        self.arrows_from = {v: [a for a in self.arrows if a.source == v] for v in self.vertices}
        self.arrows_to = {v: [a for a in self.arrows if a.target == v] for v in self.vertices}
        self.vertex_index = {v: i for i, v in enumerate(self.vertices)}


@dataclass(frozen=True)
class Path:
    source: str
    target: str
    arrows: tuple

    def __len__(self):
        return len(self.arrows)

    @staticmethod
    def trivial(v):
        return Path(v, v, ())

    def label(self):
        return "e_" + self.source if not self.arrows else ".".join(self.arrows)


def compose(p, q):
    """p then q (diagrammatic)."""
    if p.target != q.source:
        raise ShapeError(f"paths not composable: {p.label()} then {q.label()}")
    return Path(p.source, q.target, p.arrows + q.arrows)


def path_from_arrows(quiver, arrow_names):
    arrows = [quiver.arrow_by_name[n] for n in arrow_names]
    for a, b in zip(arrows, arrows[1:]):
        if a.target != b.source:
            raise ParseError(f"arrows {a.name}.{b.name} not composable")
    return Path(arrows[0].source, arrows[-1].target, tuple(arrow_names))


class Relation:
    """A parallel linear combination of paths of length >= 2."""

    def __init__(self, terms):
        if not terms:
            raise ParseError("empty relation")
        self.terms = [(c, p) for c, p in terms]
        src = {p.source for _, p in self.terms}
        tgt = {p.target for _, p in self.terms}
        if len(src) != 1 or len(tgt) != 1:
            raise ParseError("relation paths are not parallel")
        if any(len(p) < 2 for _, p in self.terms):
            raise ParseError("relation path of length < 2 (ideal must be admissible)")
        self.source = src.pop()
        self.target = tgt.pop()

    def reversed(self):
        return Relation([(c, Path(p.target, p.source, tuple(reversed(p.arrows)))) for c, p in self.terms])

    def max_len(self):
        return max(len(p) for _, p in self.terms)


class BoundQuiverAlgebra:
    """kQ/I with a path basis, reduction table and nilpotency degree.

    Built through build_algebra(); do not construct directly.
    """

    def __init__(self, quiver, relations, field, basis, reduction, nilpotency_degree, length_cap):
        self.quiver = quiver
        self.relations = relations
        self.field = field
        self.basis = basis                  # list of Path, ordered by (length, discovery)
        self.nilpotency_degree = nilpotency_degree
        self.length_cap = length_cap
        self._reduction = reduction         # Path -> tuple[(coeff, basis Path)], len < degree only
        self.basis_index = {p: i for i, p in enumerate(basis)}
        self._from = {v: [p for p in basis if p.source == v] for v in quiver.vertices}
        self._into = {v: [p for p in basis if p.target == v] for v in quiver.vertices}
        self._opposite = None
        self._t2 = None

    @property
    def dim(self):
        return len(self.basis)

    def paths_from(self, v):
        return self._from[v]

    def paths_into(self, v):
        return self._into[v]

    def reduce_path(self, p):
        """Class of a path in the basis, as a list of (coeff, basis path)."""
        if len(p) >= self.nilpotency_degree:
            return ()
        if p in self.basis_index:
            return ((self.field.one, p),)
        return self._reduction[p]

    def reduce_terms(self, terms):
        """Reduce a linear combination of paths; returns dict basis-path -> coeff."""
        f = self.field
        acc = {}
        for c, p in terms:
            for c2, b in self.reduce_path(p):
                acc[b] = f.add(acc.get(b, f.zero), f.mul(c, c2))
        return {b: c for b, c in acc.items() if c != f.zero}

    def multiply(self, p, q):
        """Product 'p then q' of two basis paths, reduced."""
        if p.target != q.source:
            return {}
        return self.reduce_terms([(self.field.one, compose(p, q))])

    def opposite(self):
        """The opposite algebra; an involution (op of op is this object)."""
        if self._opposite is None:
            q = self.quiver
            op_quiver = Quiver(q.vertices, [Arrow(a.name, a.target, a.source) for a in q.arrows])
            op_rels = [r.reversed() for r in self.relations]
            op = build_algebra(op_quiver, op_rels, self.field, length_cap=self.length_cap)
            op._opposite = self
            self._opposite = op
        return self._opposite

    def op_path(self, p):
        """The same path seen in the opposite algebra (arrows reversed)."""
        return Path(p.target, p.source, tuple(reversed(p.arrows)))

    def t2(self):
        """The triangular matrix algebra T2 and its vertex/arrow correspondence."""
        if self._t2 is None:
            self._t2 = _build_t2(self)
        return self._t2


def _enumerate_paths(quiver, max_len, path_cap):
    by_len = [[Path.trivial(v) for v in quiver.vertices]]
    total = len(by_len[0])
    for _ in range(1, max_len + 1):
        nxt = []
        for p in by_len[-1]:
            for a in quiver.arrows_from[p.target]:
                nxt.append(Path(p.source, a.target, p.arrows + (a.name,)))
        total += len(nxt)
        if total > path_cap:
            raise NonAdmissibleError(
                f"more than {path_cap} paths below length {max_len}; ideal looks non-admissible"
            )
        if not nxt:
            break
        by_len.append(nxt)
    return by_len


def _in_span(R, pivots, vec, field):
    v = list(vec)
    for r, c in enumerate(pivots):
        if v[c] != field.zero:
            coef = v[c]
            row = R.data[r]
            v = [field.sub(x, field.mul(coef, y)) for x, y in zip(v, row)]
    return all(x == field.zero for x in v)


def _try_basis(quiver, relations, field, level, path_cap):
    """Compute a basis of kQ/(I + paths of length >= level) inside the window
    of paths shorter than `level`. Returns None when no path length can be
    certified dead inside the window.

    Certification: a dead level n is accepted only if every length-n path lies
    in the span of *untruncated* products u.r.w (which are literal ideal
    elements), so R^n <= I holds exactly; the truncated reduction table is then
    the true quotient. Mixed-length non-admissible ideals (e.g. x^2 - x^3)
    fail certification forever and surface as NonAdmissibleError at the cap.
    """
    by_len = _enumerate_paths(quiver, level - 1, path_cap)
    paths = [p for lvl in by_len for p in lvl]
    index = {p: i for i, p in enumerate(paths)}

    rows, exact_rows = [], []
    for rel in relations:
        minlen = min(len(p) for _, p in rel.terms)
        maxlen = rel.max_len()
        for u in paths:
            if u.target != rel.source:
                continue
            for w in paths:
                if w.source != rel.target:
                    continue
                if len(u) + len(w) + minlen > level - 1:
                    continue
                row = [field.zero] * len(paths)
                nonzero = False
                for c, p in rel.terms:
                    full = Path(u.source, w.target, u.arrows + p.arrows + w.arrows)
                    if len(full) <= level - 1:
                        row[index[full]] = field.add(row[index[full]], c)
                        nonzero = True
                if nonzero:
                    rows.append(row)
                    if len(u) + len(w) + maxlen <= level - 1:
                        exact_rows.append(row)

    if rows:
        R, pivots = rref(Mat(field, len(rows), len(paths), rows))
        pivot_rows = {c: r for r, c in enumerate(pivots)}
    else:
        R, pivots, pivot_rows = None, [], {}
    pivot_set = set(pivots)

    def expand(i):
        if i not in pivot_set:
            return ((field.one, paths[i]),)
        row = R.data[pivot_rows[i]]
        return tuple(
            (field.neg(row[j]), paths[j])
            for j in range(len(paths))
            if j != i and row[j] != field.zero
        )

    # least length where every path dies in the truncated span
    degree = None
    for n in range(1, level):
        lvl = by_len[n] if n < len(by_len) else []
        if all(i in pivot_set and not expand(i) for i in (index[p] for p in lvl)):
            degree = n
            break
    if degree is None:
        return None

    dead_level = by_len[degree] if degree < len(by_len) else []
    if dead_level:
        if exact_rows:
            Re, pive = rref(Mat(field, len(exact_rows), len(paths), exact_rows))
        else:
            return None
        for p in dead_level:
            vec = [field.zero] * len(paths)
            vec[index[p]] = field.one
            if not _in_span(Re, pive, vec, field):
                return None

    basis = [paths[i] for i in range(len(paths)) if i not in pivot_set and len(paths[i]) < degree]
    reduction = {
        paths[i]: expand(i)
        for i in range(len(paths))
        if i in pivot_set and len(paths[i]) < degree
    }
    return basis, reduction, degree


def build_algebra(quiver, relations, field, length_cap=32, path_cap=200000):
    """Compute the path basis of kQ/I, raising NonAdmissibleError when paths
    never die out below the length cap."""
    relations = list(relations)
    maxrel = max((r.max_len() for r in relations), default=2)
    level = min(length_cap, max(3, maxrel + 2))
    while True:
        got = _try_basis(quiver, relations, field, level, path_cap)
        if got is not None:
            basis, reduction, degree = got
            return BoundQuiverAlgebra(quiver, relations, field, basis, reduction, degree, length_cap)
        if level >= length_cap:
            raise NonAdmissibleError(
                f"paths do not die out below length {length_cap}; ideal is not admissible "
                "(or raise length_cap)"
            )
        level = min(length_cap, level + max(2, maxrel))


class T2Data:
    """Bookkeeping for T2(A): doubled vertices/arrows plus connector arrows."""

    def __init__(self, base, algebra):
        self.base = base
        self.algebra = algebra

    @staticmethod
    def v1(v):
        return f"{v}@1"

    @staticmethod
    def v2(v):
        return f"{v}@2"

    @staticmethod
    def a1(a):
        return f"{a}@1"

    @staticmethod
    def a2(a):
        return f"{a}@2"

    @staticmethod
    def eps(v):
        # bracketed so that iterated T2 constructions cannot collide with
        # the @1/@2 suffixes of lifted arrows
        return f"eps[{v}]"


def _build_t2(base):
    q = base.quiver
    verts = [T2Data.v1(v) for v in q.vertices] + [T2Data.v2(v) for v in q.vertices]
    arrows = (
        [Arrow(T2Data.a1(a.name), T2Data.v1(a.source), T2Data.v1(a.target)) for a in q.arrows]
        + [Arrow(T2Data.a2(a.name), T2Data.v2(a.source), T2Data.v2(a.target)) for a in q.arrows]
        + [Arrow(T2Data.eps(v), T2Data.v1(v), T2Data.v2(v)) for v in q.vertices]
    )
    t2q = Quiver(verts, arrows)
    one = base.field.one
    rels = []
    for lift_v, lift_a in ((T2Data.v1, T2Data.a1), (T2Data.v2, T2Data.a2)):
        for r in base.relations:
            rels.append(
                Relation(
                    [
                        (c, Path(lift_v(p.source), lift_v(p.target), tuple(lift_a(a) for a in p.arrows)))
                        for c, p in r.terms
                    ]
                )
            )
    for a in q.arrows:
        # commutator: (a@1 then eps@target) - (eps@source then a@2)
        rels.append(
            Relation(
                [
                    (one, Path(T2Data.v1(a.source), T2Data.v2(a.target), (T2Data.a1(a.name), T2Data.eps(a.target)))),
                    (base.field.neg(one), Path(T2Data.v1(a.source), T2Data.v2(a.target), (T2Data.eps(a.source), T2Data.a2(a.name)))),
                ]
            )
        )
    alg = build_algebra(t2q, rels, base.field, length_cap=base.length_cap)
    return T2Data(base, alg)
