"""Multivariate polynomials with individual degree <= q-1, and the
multiplicity-interpolation machinery built on them.

A monomial is an exponent tuple; a polynomial is a sparse map from
exponent tuples to nonzero element ints.  The solver finds a nonzero
polynomial vanishing to prescribed multiplicity on a point set by
taking a nullspace vector of the shift-coefficient constraint matrix
over F_q.
"""

from __future__ import annotations

import math
from itertools import product

MAX_COLUMNS = 1 << 20


class BoundNotSatisfiedError(ValueError):
    """The interpolation count C(m+n-1,n)*|S| is not below N_q(n,m)."""

    def __init__(self, constraints, unknowns):
        self.constraints = constraints
        self.unknowns = unknowns
        super().__init__(
            f"bound not satisfied: {constraints} constraints >= "
            f"{unknowns} unknown coefficients"
        )


class MultiPoly:
    """Sparse polynomial over F_q in n variables, each exponent <= q-1."""

    __slots__ = ("field", "n", "coeffs")

    def __init__(self, field, n, coeffs):
        clean = {}
        for e, c in coeffs.items():
            if c == 0:
                continue
            if len(e) != n or any(not 0 <= ei < field.q for ei in e):
                raise ValueError(f"bad exponent vector {e} for q={field.q}, n={n}")
            clean[tuple(e)] = c
        self.field = field
        self.n = n
        self.coeffs = clean

    def is_zero(self):
        return not self.coeffs

    def total_degree(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no degree")
        return max(sum(e) for e in self.coeffs)

    def evaluate(self, point):
        if len(point) != self.n:
            raise ValueError("dimension mismatch")
        f = self.field
        acc = 0
        for e, c in self.coeffs.items():
            term = c
            for x, ei in zip(point, e):
                if ei:
                    term = f.mul(term, f.pow(x, ei))
            acc = f.add(acc, term)
        return acc

    def __add__(self, other):
        f = self.field
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = f.add(out.get(e, 0), c)
        return MultiPoly(f, self.n, out)

    def __eq__(self, other):
        return (
            isinstance(other, MultiPoly)
            and self.field is other.field
            and self.n == other.n
            and self.coeffs == other.coeffs
        )

    def __repr__(self):
        return f"MultiPoly(q={self.field.q}, n={self.n}, terms={len(self.coeffs)})"

    def to_dict(self):
        terms = sorted(self.coeffs.items(), key=lambda ec: (sum(ec[0]), ec[0]))
        return {
            "format": 1,
            "q": self.field.q,
            "n": self.n,
            "terms": [{"e": list(e), "c": c} for e, c in terms],
        }


def multipoly_from_dict(d) -> MultiPoly:
    from .gf import field_make

    field = field_make(d["q"])
    return MultiPoly(field, d["n"], {tuple(t["e"]): t["c"] for t in d["terms"]})


def monomial_basis(field, n, m):
    """Exponent vectors with e_i <= q-1 and sum < m*q, graded-lex order."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if field.q**n > MAX_COLUMNS:
        raise ValueError(
            f"monomial space q^n = {field.q**n} exceeds the {MAX_COLUMNS} guard"
        )
    cap = m * field.q
    exps = [e for e in product(range(field.q), repeat=n) if sum(e) < cap]
    exps.sort(key=lambda e: (sum(e), e))
    return exps


def _low_degree_targets(n, m):
    """All exponent vectors of total degree < m, graded-lex order."""
    targets = [f for f in product(range(m), repeat=n) if sum(f) < m]
    targets.sort(key=lambda f: (sum(f), f))
    return targets


def _shift_row(field, a, f, basis, powers):
    """Linear form: coefficient of x^f in g(x + a), over the basis columns.

    Binomials reduce mod p; a residue r < p is already a valid element
    rep (the constant polynomial r) in both prime and extension fields.
    """
    p = field.p
    row = []
    for e in basis:
        if any(fi > ei for fi, ei in zip(f, e)):
            row.append(0)
            continue
        c = 1
        for i, (ei, fi) in enumerate(zip(e, f)):
            b = math.comb(ei, fi) % p
            if b == 0:
                c = 0
                break
            c = field.mul(c, field.mul(b, powers[i][ei - fi]))
        row.append(c)
    return row


def shift_constraint_rows(field, a, m, basis):
    """The C(m+n-1, n) linear forms expressing multiplicity >= m at a."""
    n = len(a)
    powers = [[1] * field.q for _ in range(n)]
    for i, ai in enumerate(a):
        for j in range(1, field.q):
            powers[i][j] = field.mul(powers[i][j - 1], ai)
    return [_shift_row(field, a, f, basis, powers) for f in _low_degree_targets(n, m)]


def nullspace_vector(field, rows, ncols):
    """A deterministic nonzero nullspace vector, or None if full rank.

    Plain Gaussian elimination to reduced row echelon form; the first
    free column gets value 1 and the remaining free columns 0.
    """
    mat = [list(r) for r in rows if any(r)]
    sub, mul, inv = field.sub, field.mul, field.inv
    pivot_col_of_row = []
    r = 0
    for col in range(ncols):
        pivot = None
        for i in range(r, len(mat)):
            if mat[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        piv_inv = inv(mat[r][col])
        mat[r] = [mul(piv_inv, x) for x in mat[r]]
        prow = mat[r]
        for i in range(len(mat)):
            if i != r and mat[i][col] != 0:
                fac = mat[i][col]
                mat[i] = [sub(x, mul(fac, y)) for x, y in zip(mat[i], prow)]
        pivot_col_of_row.append(col)
        r += 1
        if r == len(mat):
            break
    pivot_cols = set(pivot_col_of_row)
    free = next((c for c in range(ncols) if c not in pivot_cols), None)
    if free is None:
        return None
    vec = [0] * ncols
    vec[free] = 1
    for row_idx, col in enumerate(pivot_col_of_row):
        vec[col] = field.neg(mat[row_idx][free])
    return vec


def find_vanishing_poly(field, points, m) -> MultiPoly:
    """A nonzero polynomial vanishing to multiplicity m at every point.

    Requires the strict counting inequality C(m+n-1,n)*|S| < N_q(n,m);
    refuses otherwise with both sides in the error.
    """
    points = sorted(set(points))
    if not points:
        raise ValueError("empty point set")
    n = len(points[0])
    basis = monomial_basis(field, n, m)
    ncols = len(basis)
    nrows = math.comb(m + n - 1, n) * len(points)
    if nrows >= ncols:
        raise BoundNotSatisfiedError(nrows, ncols)
    rows = []
    for a in points:
        rows.extend(shift_constraint_rows(field, a, m, basis))
    vec = nullspace_vector(field, rows, ncols)
    if vec is None:
        raise AssertionError(
            "no nontrivial nullspace despite satisfied counting bound"
        )
    g = MultiPoly(field, n, {e: c for e, c in zip(basis, vec) if c != 0})
    assert not g.is_zero()
    return g


def multiplicity_at(g: MultiPoly, a):
    """Largest m with no support of g(x + a) below total degree m.

    Returns math.inf for the zero polynomial.
    """
    if g.is_zero():
        return math.inf
    f = g.field
    p = f.p
    shifted = {}
    for e, c in g.coeffs.items():
        pows = [[1] for _ in e]
        for i, (ei, ai) in enumerate(zip(e, a)):
            for _ in range(ei):
                pows[i].append(f.mul(pows[i][-1], ai))
        for tgt in product(*[range(ei + 1) for ei in e]):
            w = c
            for i, (ei, fi) in enumerate(zip(e, tgt)):
                b = math.comb(ei, fi) % p
                if b == 0:
                    w = 0
                    break
                w = f.mul(w, f.mul(b, pows[i][ei - fi]))
            if w != 0:
                shifted[tgt] = f.add(shifted.get(tgt, 0), w)
    degrees = [sum(e) for e, c in shifted.items() if c != 0]
    return min(degrees)


def _umul(u, v, field):
    if not u or not v:
        return []
    out = [0] * (len(u) + len(v) - 1)
    for i, a in enumerate(u):
        if a == 0:
            continue
        for j, b in enumerate(v):
            out[i + j] = field.add(out[i + j], field.mul(a, b))
    while out and out[-1] == 0:
        out.pop()
    return out


def _uadd(u, v, field):
    out = [0] * max(len(u), len(v))
    for i, a in enumerate(u):
        out[i] = a
    for i, b in enumerate(v):
        out[i] = field.add(out[i], b)
    while out and out[-1] == 0:
        out.pop()
    return out


def restrict_to_line(g: MultiPoly, base, direction):
    """Univariate coefficients (little-endian) of t -> g(base + t*dir)."""
    f = g.field
    n = g.n
    maxe = [0] * n
    for e in g.coeffs:
        for i, ei in enumerate(e):
            maxe[i] = max(maxe[i], ei)
    # powers of each linear form a_i + t*b_i, built by repeated multiplication
    lin_pows = []
    for i in range(n):
        li = [base[i], direction[i]]
        while li and li[-1] == 0:
            li.pop()
        pows = [[1]]
        for _ in range(maxe[i]):
            pows.append(_umul(pows[-1], li, f))
        lin_pows.append(pows)
    out = []
    for e, c in g.coeffs.items():
        term = [c]
        for i, ei in enumerate(e):
            if ei:
                term = _umul(term, lin_pows[i][ei], f)
        out = _uadd(out, term, f)
    return out


def poly_eval(coeffs, t, field):
    """Horner evaluation of a univariate coefficient list."""
    acc = 0
    for c in reversed(coeffs):
        acc = field.add(field.mul(acc, t), c)
    return acc


def root_multiplicity(coeffs, t0, field):
    """Order of the root t0 (math.inf for the zero polynomial)."""
    cur = list(coeffs)
    while cur and cur[-1] == 0:
        cur.pop()
    if not cur:
        return math.inf
    m = 0
    while True:
        # synthetic division by (t - t0)
        quot = [0] * (len(cur) - 1)
        carry = 0
        for i in range(len(cur) - 1, 0, -1):
            carry = field.add(cur[i], field.mul(carry, t0))
            quot[i - 1] = carry
        rem = field.add(cur[0], field.mul(carry, t0))
        if rem != 0:
            return m
        m += 1
        cur = quot
        if not cur:
            return m


def leading_homogeneous(g: MultiPoly) -> MultiPoly:
    """The top-degree homogeneous part of a nonzero polynomial."""
    if g.is_zero():
        raise ValueError("zero polynomial has no leading part")
    d = g.total_degree()
    return MultiPoly(g.field, g.n, {e: c for e, c in g.coeffs.items() if sum(e) == d})
