"""Krull-Schmidt decomposition with certificates, and exact isomorphism tests.

Splitting uses Fitting's lemma on deterministic probes through End(m) (basis
elements, pairwise sums/differences, then a seeded random sweep). A leaf is
accepted as indecomposable only when End/rad is certified to be a division
algebra; when the quotient is larger than the base field, a nontrivial
idempotent is extracted from the minimal polynomial of a probe element and
lifted, so a decomposable leaf can never be certified. Inconclusive leaves
raise instead of being silently accepted.
"""

import random

import sympy

from .errors import DecompositionInconclusive, FieldTooSmallError, ShapeError
from .fields import QQ
from .matrix import Mat, hstack, kernel_basis, quotient_maps, solve
from .reps import ModMap, direct_sum, hom_basis, image, kernel, map_from_vec


class EndoAlgebra:
    """End(m) with structure constants over a chosen hom basis."""

    def __init__(self, m):
        self.rep = m
        self.basis = hom_basis(m, m)
        self.dim = len(self.basis)
        f = m.algebra.field
        self.field = f
        vecs = [b.vec() for b in self.basis]
        n = len(vecs[0]) if vecs else 0
        self._coord_mat = Mat(f, n, self.dim, [[vecs[j][i] for j in range(self.dim)] for i in range(n)])
        self.table = [
            [self.expand(self.basis[i] @ self.basis[j]) for j in range(self.dim)]
            for i in range(self.dim)
        ]
        self.unit = self.expand(ModMap.identity(m)) if self.dim else []

    def expand(self, g):
        """Coordinates of an endomorphism in the chosen basis."""
        vec = g.vec()
        sol = solve(self._coord_mat, Mat.column(self.field, vec))
        if sol is None:
            raise ShapeError("endomorphism does not lie in End(m)")
        return [sol.data[i][0] for i in range(self.dim)]

    def element(self, coords):
        f = self.field
        acc = ModMap.zero_map(self.rep, self.rep)
        for c, b in zip(coords, self.basis):
            if c != f.zero:
                acc = acc.add(b.scale(c))
        return acc

    def mul(self, x, y):
        f = self.field
        out = [f.zero] * self.dim
        for i, xi in enumerate(x):
            if xi == f.zero:
                continue
            for j, yj in enumerate(y):
                if yj == f.zero:
                    continue
                for k, t in enumerate(self.table[i][j]):
                    out[k] = f.add(out[k], f.mul(f.mul(xi, yj), t))
        return out

    def left_mult(self, x):
        f = self.field
        cols = []
        for j in range(self.dim):
            ej = [f.zero] * self.dim
            ej[j] = f.one
            cols.append(self.mul(x, ej))
        return Mat(f, self.dim, self.dim, [[cols[j][i] for j in range(self.dim)] for i in range(self.dim)])


def endo_algebra(m):
    return EndoAlgebra(m)


def algebra_radical(endo):
    """Jacobson radical via the trace form tr(L_x L_y); valid in characteristic
    zero or p greater than the algebra dimension."""
    f = endo.field
    p = f.characteristic
    if p and p <= endo.dim:
        raise FieldTooSmallError(f"trace-form radical needs p > dim End = {endo.dim}, got p = {p}")
    if endo.dim == 0:
        return []
    mults = []
    for i in range(endo.dim):
        ei = [f.zero] * endo.dim
        ei[i] = f.one
        mults.append(endo.left_mult(ei))
    def tr(m):
        t = f.zero
        for i in range(m.rows):
            t = f.add(t, m.data[i][i])
        return t
    gram = Mat(
        f,
        endo.dim,
        endo.dim,
        [[tr(mults[i].mul(mults[j])) for j in range(endo.dim)] for i in range(endo.dim)],
    )
    ker = kernel_basis(gram)
    return [[ker.data[i][j] for i in range(endo.dim)] for j in range(ker.cols)]


def _min_poly(endo_mul, unit, theta, dim, field):
    """Monic minimal polynomial of theta in a finite-dimensional algebra given
    by its multiplication; returns coefficients [c0, ..., c_{d-1}, 1]."""
    powers = [list(unit)]
    while True:
        nxt = endo_mul(powers[-1], theta)
        cols = powers + [nxt]
        mat = Mat(field, dim, len(cols), [[cols[j][i] for j in range(len(cols))] for i in range(dim)])
        dep = kernel_basis(mat)
        if dep.cols:
            coeffs = [dep.data[i][0] for i in range(dep.rows)]
            lead = coeffs[-1]
            if lead == field.zero:
                # dependency among earlier powers; drop the last and retry
                raise ShapeError("power sequence degenerated")
            inv = field.inv(lead)
            return [field.mul(inv, c) for c in coeffs]
        powers.append(nxt)


def _sympy_poly(coeffs, field):
    x = sympy.Symbol("x")
    if field.characteristic == 0:
        expr = sum(sympy.Rational(c.numerator, c.denominator) * x**i for i, c in enumerate(coeffs))
        return sympy.Poly(expr, x, domain="QQ")
    expr = sum(int(c) * x**i for i, c in enumerate(coeffs))
    return sympy.Poly(expr, x, modulus=field.characteristic)


def _coeffs_from_sympy(poly, field):
    cs = poly.all_coeffs()[::-1]
    if field.characteristic == 0:
        from fractions import Fraction

        return [Fraction(sympy.Rational(c).p, sympy.Rational(c).q) for c in cs]
    return [field.of(int(c)) for c in cs]


class QuotientAlgebra:
    """E/rad as an abstract algebra in complement coordinates."""

    def __init__(self, endo, rad_coords):
        f = endo.field
        self.field = f
        self.endo = endo
        k = endo.dim
        if rad_coords:
            sub = Mat(f, k, len(rad_coords), [[rad_coords[j][i] for j in range(len(rad_coords))] for i in range(k)])
        else:
            sub = Mat.zeros(f, k, 0)
        self.proj, self.section = quotient_maps(sub, k)
        self.dim = self.proj.rows

    def _down(self, coords):
        col = Mat.column(self.field, coords)
        return [self.proj.mul(col).data[i][0] for i in range(self.dim)]

    def _up(self, qcoords):
        col = Mat.column(self.field, qcoords)
        return [self.section.mul(col).data[i][0] for i in range(self.endo.dim)]

    def mul(self, x, y):
        return self._down(self.endo.mul(self._up(x), self._up(y)))

    @property
    def unit(self):
        return self._down(self.endo.unit)

    def is_commutative(self):
        f = self.field
        basis = [[f.one if i == j else f.zero for j in range(self.dim)] for i in range(self.dim)]
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                if self.mul(basis[i], basis[j]) != self.mul(basis[j], basis[i]):
                    return False
        return True


def _poly_apply(q, coeffs, theta):
    """Evaluate a polynomial at theta inside the quotient algebra q."""
    f = q.field
    acc = [f.mul(coeffs[0], u) for u in q.unit]
    power = list(q.unit)
    for c in coeffs[1:]:
        power = q.mul(power, theta)
        if c != f.zero:
            acc = [f.add(a, f.mul(c, p)) for a, p in zip(acc, power)]
    return acc


def _idempotent_from_probe(q, theta):
    """A nontrivial idempotent of E/rad in k[theta], or 'division' when theta
    certifies a division algebra, or None when the probe is uninformative."""
    f = q.field
    mu = _min_poly(q.mul, q.unit, theta, q.dim, f)
    poly = _sympy_poly(mu, f)
    factors = poly.factor_list()[1]
    deg = len(mu) - 1
    if len(factors) == 1 and factors[0][1] == 1:
        if deg == q.dim:
            return "division"
        return None
    if len(factors) < 2:
        return None  # prime power: no idempotent from this probe
    f1 = factors[0][0] ** factors[0][1]
    rest = poly.quo(f1)
    g, a, b = sympy.gcdex(f1, rest)
    if sympy.Poly(g, f1.gens[0]).degree() != 0:
        return None
    # e = (a*f1)/g evaluated at theta is 0 mod f1 and 1 mod rest
    e_poly = sympy.Poly(sympy.expand(a * f1 / g), f1.gens[0])
    e_poly = e_poly.rem(poly)
    coeffs = _coeffs_from_sympy(e_poly, f)
    e = _poly_apply(q, coeffs, theta)
    zero = [f.zero] * q.dim
    if e == zero or e == q.unit:
        return None
    return e


def _lift_idempotent(endo, ebar_coords, quotient):
    """Lift an idempotent of E/rad to E by Newton iteration e <- 3e^2 - 2e^3."""
    f = endo.field
    e = quotient._up(ebar_coords)
    for _ in range(4 * (endo.dim + 2)):
        e2 = endo.mul(e, e)
        if e2 == e:
            return e
        e3 = endo.mul(e2, e)
        three, two = f.of(3), f.of(2)
        e = [f.sub(f.mul(three, a), f.mul(two, b)) for a, b in zip(e2, e3)]
    raise DecompositionInconclusive("idempotent lifting did not converge")


def _fitting_split(m, phi):
    """Split m = ker(phi^N) + im(phi^N) when both are proper (N = total dim)."""
    n = m.total_dim
    power = phi
    steps = 1
    while steps < n:
        power = power @ power
        steps *= 2
    k, inck = kernel(power)
    if k.total_dim == 0 or k.total_dim == m.total_dim:
        return None
    i, inci = image(power)
    if k.total_dim + i.total_dim != m.total_dim:
        return None
    combined = {
        v: hstack(m.algebra.field, [inck.mats[v], inci.mats[v]], rows=m.dims[v]) for v in m.dims
    }
    total, injs, _ = direct_sum([k, i])
    glue = ModMap(total, m, combined, check=False)
    if glue.inverse() is None:
        return None
    return (k, inck), (i, inci)


def _probe_elements(endo, rng, tries):
    f = endo.field
    k = endo.dim
    for i in range(k):
        yield [f.one if j == i else f.zero for j in range(k)]
    for i in range(k):
        for j in range(i + 1, k):
            yield [f.one if t in (i, j) else f.zero for t in range(k)]
            yield [f.one if t == i else (f.neg(f.one) if t == j else f.zero) for t in range(k)]
    span = 3 if f.characteristic == 0 else max(1, f.characteristic - 1)
    for _ in range(tries):
        yield [f.of(rng.randint(-span, span)) for _ in range(k)]


class Decomposition:
    """Indecomposable parts with an explicit glueing isomorphism.

    iso: direct_sum(parts) -> m, invertible; conjugating m by it exhibits the
    block-diagonal form. certificates records how each leaf was accepted.
    """

    def __init__(self, rep, parts, inclusions, certificates, seed):
        self.rep = rep
        self.parts = parts
        self.inclusions = inclusions
        self.certificates = certificates
        self.seed = seed
        if parts:
            total, _, _ = direct_sum(parts)
            mats = {
                v: hstack(rep.algebra.field, [inc.mats[v] for inc in inclusions], rows=rep.dims[v])
                for v in rep.dims
            }
            self.iso = ModMap(total, rep, mats, check=False)
        else:
            self.iso = ModMap.zero_map(rep, rep)
        self._iso_inv = None

    @property
    def iso_inv(self):
        if self._iso_inv is None and self.parts:
            self._iso_inv = self.iso.inverse()
            if self._iso_inv is None:
                raise ShapeError("decomposition glue map is not invertible")
        return self._iso_inv

    def change_of_basis(self):
        return {v: self.iso.mats[v] for v in self.rep.dims}

    def grouped(self):
        """Summands up to isomorphism with multiplicities, deterministic order."""
        groups = []
        for p in self.parts:
            for g in groups:
                if indec_iso(g[0], p) is not None:
                    g[1] += 1
                    break
            else:
                groups.append([p, 1])
        return [(g[0], g[1]) for g in groups]


_decomp_cache = {}


def decompose(m, seed=20240817, tries=40):
    cache_key = (id(m.algebra), m.key(), seed)
    hit = _decomp_cache.get(cache_key)
    if hit is not None:
        return hit
    rng = random.Random(seed)
    worklist = [(m, ModMap.identity(m))]
    leaves = []
    while worklist:
        x, incl = worklist.pop()
        if x.total_dim == 0:
            continue
        endo = endo_algebra(x)
        split = None
        for coords in _probe_elements(endo, rng, tries):
            phi = endo.element(coords)
            split = _fitting_split(x, phi)
            if split is not None:
                break
        if split is None:
            rad = algebra_radical(endo)
            if endo.dim - len(rad) == 1:
                leaves.append((x, incl, {"indecomposable": "End/rad = k", "rad_dim": len(rad)}))
                continue
            quotient = QuotientAlgebra(endo, rad)
            verdict = None
            for coords in _probe_elements(endo, rng, tries):
                theta = quotient._down(coords)
                got = _idempotent_from_probe(quotient, theta)
                if got == "division" and quotient.is_commutative():
                    verdict = ("local", "k[theta] is a field of full degree")
                    break
                if isinstance(got, list):
                    e = _lift_idempotent(endo, got, quotient)
                    split = _fitting_split(x, endo.element(e))
                    if split is not None:
                        verdict = ("split", split)
                        break
            if verdict is None:
                raise DecompositionInconclusive(
                    f"cannot certify End/rad (dim {quotient.dim}) as a division algebra"
                )
            if verdict[0] == "local":
                leaves.append((x, incl, {"indecomposable": verdict[1], "rad_dim": len(rad)}))
                continue
            split = verdict[1]
        (k, inck), (i, inci) = split
        worklist.append((k, incl @ inck))
        worklist.append((i, incl @ inci))

    leaves.sort(key=lambda t: (t[0].total_dim, t[0].dims_vec(), t[0].key()))
    result = Decomposition(
        m, [l[0] for l in leaves], [l[1] for l in leaves], [l[2] for l in leaves], seed
    )
    if len(_decomp_cache) > 4096:
        _decomp_cache.clear()
    _decomp_cache[cache_key] = result
    return result


def indec_iso(m, n):
    """An isomorphism between certified-indecomposable reps, or None.

    Complete for indecomposables: if m = n, the units of Hom(m, n) = End(m)
    form the complement of a proper subspace, so some hom-basis element is
    invertible.
    """
    if m.algebra is not n.algebra or m.dims_vec() != n.dims_vec():
        return None
    for h in hom_basis(m, n):
        inv = h.inverse()
        if inv is not None:
            return h
    return None


def iso_between(m, n, seed=20240817):
    """An explicit isomorphism m -> n, or None; works through decompositions."""
    if m.algebra is not n.algebra or m.dims_vec() != n.dims_vec():
        return None
    dm, dn = decompose(m, seed), decompose(n, seed)
    if len(dm.parts) != len(dn.parts):
        return None
    used = [False] * len(dn.parts)
    assignment = []
    for p in dm.parts:
        found = None
        for j, q in enumerate(dn.parts):
            if used[j]:
                continue
            psi = indec_iso(p, q)
            if psi is not None:
                found = (j, psi)
                break
        if found is None:
            return None
        used[found[0]] = True
        assignment.append(found)
    if not dm.parts:
        return ModMap.zero_map(m, n)
    total_m, _, projs_m = direct_sum(dm.parts)
    total_n, injs_n, _ = direct_sum(dn.parts)
    f_block = ModMap.zero_map(total_m, total_n)
    for i, (j, psi) in enumerate(assignment):
        f_block = f_block.add(injs_n[j] @ psi @ projs_m[i])
    return dn.iso @ f_block @ dm.iso_inv


def is_isomorphic(m, n, seed=20240817):
    if m.algebra is not n.algebra:
        return False
    if m.dims_vec() != n.dims_vec():
        return False
    if len(hom_basis(m, n)) != len(hom_basis(n, m)):
        return False
    return iso_between(m, n, seed) is not None


def split_off(m, keep, seed=20240817):
    """Split m into (kept, dropped) along the predicate keep(part).

    Returns (kept_rep, incl: kept -> m, proj: m -> kept, dropped_parts) with
    proj o incl the identity.
    """
    d = decompose(m, seed)
    kept = [i for i, p in enumerate(d.parts) if keep(p)]
    dropped = [p for i, p in enumerate(d.parts) if i not in set(kept)]
    f = m.algebra.field
    kept_parts = [d.parts[i] for i in kept]
    if not kept_parts:
        from .reps import Rep

        z = Rep.zero(m.algebra)
        return z, ModMap.zero_map(z, m), ModMap.zero_map(m, z), dropped
    total, injs, projs = direct_sum(kept_parts)
    incl_mats = {
        v: hstack(f, [d.inclusions[i].mats[v] for i in kept], rows=m.dims[v]) for v in m.dims
    }
    incl = ModMap(total, m, incl_mats, check=False)
    inv = d.iso_inv
    # rows of iso^{-1} belonging to the kept blocks
    offsets = {}
    pos = {v: 0 for v in m.dims}
    for i, p in enumerate(d.parts):
        offsets[i] = dict(pos)
        for v in m.dims:
            pos[v] += p.dims[v]
    proj_mats = {}
    for v in m.dims:
        rows = []
        for i in kept:
            start = offsets[i][v]
            rows.extend(inv.mats[v].data[start : start + d.parts[i].dims[v]])
        proj_mats[v] = Mat(f, total.dims[v], m.dims[v], rows) if rows else Mat.zeros(f, 0, m.dims[v])
    proj = ModMap(m, total, proj_mats, check=False)
    return total, incl, proj, dropped
