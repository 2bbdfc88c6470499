"""Exact linear algebra over the integers and rationals.

Everything here works on small dense matrices represented as lists of
lists of Python ints or Fractions.  No floating point: ranks, kernels
and lattice membership must be bit-exact because downstream verdicts
(torus ranks, graded exactness, tangent dimensions) are integers with
zero tolerance.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def frac_rank(rows):
    """Rank of a matrix (any rational entries), by Gaussian elimination."""
    m = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    col = 0
    while rank < len(m) and col < ncols:
        piv = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if piv is None:
            col += 1
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = m[rank][col]
        m[rank] = [x / inv for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col] != 0:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
        col += 1
    return rank


def frac_solve_space(rows):
    """Row-reduce and return (pivot_cols, reduced_rows) for a rational matrix.

    reduced_rows is the reduced row echelon form with zero rows dropped.
    """
    m = [[Fraction(x) for x in row] for row in rows]
    ncols = len(m[0]) if m else 0
    pivots = []
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = m[rank][col]
        m[rank] = [x / inv for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col] != 0:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        pivots.append(col)
        rank += 1
    return pivots, m[:rank]


def kernel_basis(rows, ncols=None):
    """Primitive integer basis of the rational kernel of an integer matrix.

    Returns a list of integer vectors spanning {v : rows @ v = 0} over Q;
    each vector is primitive (content 1).  Deterministic: free columns in
    increasing order.
    """
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    if not rows:
        return [[1 if j == i else 0 for j in range(ncols)] for i in range(ncols)]
    pivots, red = frac_solve_space(rows)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -red[r][free]
        denom = 1
        for x in vec:
            denom = denom * x.denominator // gcd(denom, x.denominator)
        ivec = [int(x * denom) for x in vec]
        g = 0
        for x in ivec:
            g = gcd(g, abs(x))
        if g > 1:
            ivec = [x // g for x in ivec]
        basis.append(ivec)
    return basis


def hnf_rows(rows):
    """Row-style Hermite normal form of an integer matrix.

    Returns the nonzero rows of a canonical basis of the row lattice:
    staircase shape, positive pivots, entries above a pivot reduced
    into [0, pivot).
    """
    m = [list(map(int, r)) for r in rows if any(r)]
    if not m:
        return []
    ncols = len(m[0])
    out = []
    for col in range(ncols):
        if not m:
            break
        sub = [r for r in m if r[col] != 0]
        rest = [r for r in m if r[col] == 0]
        if not sub:
            continue
        # Euclid on the column: leave one row carrying the gcd.
        while len(sub) > 1:
            sub.sort(key=lambda r: abs(r[col]))
            a = sub[0]
            new_sub, new_rest = [a], []
            for b in sub[1:]:
                q = b[col] // a[col]
                b2 = [x - q * y for x, y in zip(b, a)]
                if b2[col] != 0:
                    new_sub.append(b2)
                elif any(b2):
                    new_rest.append(b2)
            sub = new_sub
            rest.extend(new_rest)
        pivot = sub[0]
        if pivot[col] < 0:
            pivot = [-x for x in pivot]
        out.append(pivot)
        m = rest
    # Reduce entries above each pivot.
    for i in reversed(range(len(out))):
        pc = next(j for j, x in enumerate(out[i]) if x != 0)
        for k in range(i):
            q = out[k][pc] // out[i][pc]
            if q:
                out[k] = [x - q * y for x, y in zip(out[k], out[i])]
    return out


def lattice_rank(rows):
    """Rank of the lattice spanned by integer rows."""
    return len(hnf_rows(rows))


def in_lattice(basis_rows, vec):
    """Whether an integer vector lies in the Z-span of basis_rows."""
    h = hnf_rows(basis_rows)
    v = list(map(int, vec))
    for row in h:
        pc = next(j for j, x in enumerate(row) if x != 0)
        if v[pc] % row[pc] != 0:
            return False
        q = v[pc] // row[pc]
        v = [a - q * b for a, b in zip(v, row)]
    return not any(v)


def quotient_rank(big_rows, small_rows):
    """Rank of (lattice spanned by big) / (lattice spanned by small)."""
    return lattice_rank(list(big_rows) + list(small_rows)) - lattice_rank(small_rows)


def solve_in_basis(basis_rows, vec):
    """Integer coordinates of vec in terms of basis rows, or None.

    Solves x @ basis = vec over Q and returns integer coordinates when
    the rational solution is integral, else None.
    """
    basis = [list(map(int, r)) for r in basis_rows]
    n = len(basis)
    if n == 0:
        return [] if not any(vec) else None
    ncols = len(basis[0])
    # Solve the transposed system by elimination over Q.
    aug = [[Fraction(basis[i][j]) for i in range(n)] + [Fraction(vec[j])]
           for j in range(ncols)]
    pivots, red = frac_solve_space(aug)
    coords = [Fraction(0)] * n
    for r, pc in enumerate(pivots):
        if pc == n:
            return None  # inconsistent
        coords[pc] = red[r][n]
    # Verify (guards free columns) and check integrality.
    for j in range(ncols):
        if sum(coords[i] * basis[i][j] for i in range(n)) != vec[j]:
            return None
    if any(c.denominator != 1 for c in coords):
        return None
    return [int(c) for c in coords]


class SparseReducer:
    """Incremental exact row reduction for sparse rational vectors.

    Rows are dicts {column_key: Fraction}.  Used for membership tests in
    the span of a large sparse family (the truncated F-term ideal).
    """

    def __init__(self):
        self._pivots = {}  # column key -> reduced row with leading 1 there

    def _reduce(self, row):
        row = dict(row)
        while row:
            key = min(row)
            piv = self._pivots.get(key)
            if piv is None:
                return key, row
            c = row[key]
            for k, v in piv.items():
                nv = row.get(k, Fraction(0)) - c * v
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
        return None, {}

    def add(self, row):
        """Insert a row into the span; returns True if it was new."""
        key, red = self._reduce(row)
        if key is None:
            return False
        lead = red[key]
        self._pivots[key] = {k: v / lead for k, v in red.items()}
        return True

    def contains(self, row):
        key, _ = self._reduce(row)
        return key is None
