"""Dense exact matrices and the row-reduction kernel everything else uses.

Matrices are immutable by convention: operations return fresh objects and no
public API mutates entries. Zero-row and zero-column shapes are first-class
(representations routinely have empty vertex spaces).
"""

from .errors import ShapeError


class Mat:
    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, field, rows, cols, data):
        if len(data) != rows or any(len(r) != cols for r in data):
            raise ShapeError(f"ragged data for {rows}x{cols} matrix")
        self.field = field
        self.rows = rows
        self.cols = cols
        self.data = data

    @classmethod
    def zeros(cls, field, rows, cols):
        z = field.zero
        return cls(field, rows, cols, [[z] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, field, n):
        z, o = field.zero, field.one
        return cls(field, n, n, [[o if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def from_rows(cls, field, rows, cols=None):
        rows = [list(r) for r in rows]
        if cols is None:
            if not rows:
                raise ShapeError("from_rows with no rows needs an explicit column count")
            cols = len(rows[0])
        return cls(field, len(rows), cols, [[field.of(x) if isinstance(x, int) else x for x in r] for r in rows])

    @classmethod
    def column(cls, field, entries):
        return cls(field, len(entries), 1, [[x] for x in entries])

    def entry(self, i, j):
        return self.data[i][j]

    def is_zero(self):
        z = self.field.zero
        return all(x == z for row in self.data for x in row)

    def is_square(self):
        return self.rows == self.cols

    def __eq__(self, other):
        return (
            isinstance(other, Mat)
            and self.field == other.field
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(tuple(r) for r in self.data)))

    def key(self):
        return (self.rows, self.cols, tuple(tuple(r) for r in self.data))

    def __repr__(self):
        if self.rows == 0 or self.cols == 0:
            return f"Mat({self.rows}x{self.cols})"
        body = "; ".join(" ".join(self.field.format(x) for x in row) for row in self.data)
        return f"Mat[{body}]"

    def copy(self):
        return Mat(self.field, self.rows, self.cols, [list(r) for r in self.data])

    def transpose(self):
        return Mat(
            self.field,
            self.cols,
            self.rows,
            [[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)],
        )

    def add(self, other):
        self._same_shape(other)
        f = self.field
        return Mat(
            f,
            self.rows,
            self.cols,
            [[f.add(a, b) for a, b in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)],
        )

    def sub(self, other):
        self._same_shape(other)
        f = self.field
        return Mat(
            f,
            self.rows,
            self.cols,
            [[f.sub(a, b) for a, b in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)],
        )

    def neg(self):
        f = self.field
        return Mat(f, self.rows, self.cols, [[f.neg(a) for a in r] for r in self.data])

    def scale(self, c):
        f = self.field
        return Mat(f, self.rows, self.cols, [[f.mul(c, a) for a in r] for r in self.data])

    def mul(self, other):
        if self.cols != other.rows:
            raise ShapeError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        f = self.field
        z = f.zero
        out = [[z] * other.cols for _ in range(self.rows)]
        for i in range(self.rows):
            row = self.data[i]
            for k in range(self.cols):
                a = row[k]
                if a == z:
                    continue
                orow = other.data[k]
                orow_out = out[i]
                for j in range(other.cols):
                    b = orow[j]
                    if b != z:
                        orow_out[j] = f.add(orow_out[j], f.mul(a, b))
        return Mat(f, self.rows, other.cols, out)

    __matmul__ = mul

    def col_slice(self, j0, j1):
        return Mat(self.field, self.rows, j1 - j0, [row[j0:j1] for row in self.data])

    def _same_shape(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise ShapeError(f"shape mismatch {self.rows}x{self.cols} vs {other.rows}x{other.cols}")


def hstack(field, mats, rows=None):
    mats = list(mats)
    if not mats:
        return Mat.zeros(field, rows or 0, 0)
    rows = mats[0].rows
    if any(m.rows != rows for m in mats):
        raise ShapeError("hstack row mismatch")
    data = [[x for m in mats for x in m.data[i]] for i in range(rows)]
    return Mat(field, rows, sum(m.cols for m in mats), data)


def vstack(field, mats, cols=None):
    mats = list(mats)
    if not mats:
        return Mat.zeros(field, 0, cols or 0)
    cols = mats[0].cols
    if any(m.cols != cols for m in mats):
        raise ShapeError("vstack column mismatch")
    data = [list(r) for m in mats for r in m.data]
    return Mat(field, len(data), cols, data)


def block_diag(field, mats):
    rows = sum(m.rows for m in mats)
    cols = sum(m.cols for m in mats)
    out = Mat.zeros(field, rows, cols).data
    r0 = c0 = 0
    for m in mats:
        for i in range(m.rows):
            out[r0 + i][c0 : c0 + m.cols] = list(m.data[i])
        r0 += m.rows
        c0 += m.cols
    return Mat(field, rows, cols, out)


def rref(m):
    """Reduced row echelon form. Returns (R, pivot_columns)."""
    f = m.field
    z = f.zero
    a = [list(r) for r in m.data]
    pivots = []
    r = 0
    for c in range(m.cols):
        if r >= m.rows:
            break
        # prefer a unit pivot to keep rational entries small
        pivot = None
        for i in range(r, m.rows):
            if a[i][c] != z:
                if a[i][c] == f.one:
                    pivot = i
                    break
                if pivot is None:
                    pivot = i
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        pv = a[r][c]
        if pv != f.one:
            inv = f.inv(pv)
            a[r] = [f.mul(inv, x) for x in a[r]]
        for i in range(m.rows):
            if i != r and a[i][c] != z:
                factor = a[i][c]
                a[i] = [f.sub(x, f.mul(factor, y)) for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return Mat(f, m.rows, m.cols, a), pivots


def rank(m):
    return len(rref(m)[1])


def kernel_basis(m):
    """Columns spanning the null space of m (cols x nullity matrix)."""
    f = m.field
    R, pivots = rref(m)
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    cols = []
    for fc in free:
        v = [f.zero] * m.cols
        v[fc] = f.one
        for r, pc in enumerate(pivots):
            v[pc] = f.neg(R.data[r][fc])
        cols.append(v)
    return Mat(f, m.cols, len(cols), [[cols[j][i] for j in range(len(cols))] for i in range(m.cols)])


def image_basis(m):
    """Columns of m forming a basis of the column space."""
    _, pivots = rref(m)
    return Mat(m.field, m.rows, len(pivots), [[m.data[i][c] for c in pivots] for i in range(m.rows)])


def solve(m, b):
    """One exact solution X of m @ X = b, or None. b may have several columns."""
    if m.rows != b.rows:
        raise ShapeError(f"solve: {m.rows} rows vs rhs {b.rows}")
    f = m.field
    aug = hstack(f, [m, b])
    R, pivots = rref(aug)
    for c in pivots:
        if c >= m.cols:
            return None
    z = f.zero
    out = [[z] * b.cols for _ in range(m.cols)]
    for r, pc in enumerate(pivots):
        for j in range(b.cols):
            out[pc][j] = R.data[r][m.cols + j]
    return Mat(f, m.cols, b.cols, out)


def inverse(m):
    """Exact inverse, or None if m is not square full-rank."""
    if not m.is_square():
        return None
    x = solve(m, Mat.identity(m.field, m.rows))
    if x is None:
        return None
    if not m.mul(x).__eq__(Mat.identity(m.field, m.rows)):
        return None
    return x


def quotient_maps(sub, ambient_dim):
    """Projection & section for k^ambient_dim / column-span(sub).

    Returns (proj, section) with proj @ section = identity on the quotient and
    ker(proj) = span(sub).
    """
    f = sub.field
    if sub.rows != ambient_dim:
        raise ShapeError("quotient_maps: subspace lives in the wrong ambient space")
    basis = image_basis(sub)
    r = basis.cols
    # complete the subspace basis to a basis of the ambient space
    chosen = []
    cur = basis
    for j in range(ambient_dim):
        e = Mat.zeros(f, ambient_dim, 1)
        e.data[j][0] = f.one
        cand = hstack(f, [cur, e])
        if rank(cand) > cur.cols:
            cur = cand
            chosen.append(j)
        if cur.cols == ambient_dim:
            break
    full = cur
    inv = inverse(full)
    proj = Mat(f, ambient_dim - r, ambient_dim, [inv.data[i] for i in range(r, ambient_dim)])
    section = Mat(
        f,
        ambient_dim,
        ambient_dim - r,
        [[full.data[i][j] for j in range(r, ambient_dim)] for i in range(ambient_dim)],
    )
    return proj, section
