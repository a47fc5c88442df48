"""Exact linear algebra over Q(sqrt(5)).

Vectors are tuples of Q5, matrices are tuples of row tuples.  Everything is
small (dimension <= 8), so plain Gaussian elimination is used throughout.
Subspaces are stored by their reduced row echelon basis, which is canonical:
two equal subspaces have identical representations.
"""

from __future__ import annotations

from .qsqrt5 import ONE, ZERO, q5

Vec = tuple
Mat = tuple


def vec(entries) -> Vec:
    return tuple(q5(x) for x in entries)


def vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c, v):
    return tuple(c * x for x in v)


def vec_neg(v):
    return tuple(-x for x in v)


def vec_is_zero(v):
    return all(not x for x in v)


def dot(u, v, gram=None):
    """Inner product of u and v; plain dot product unless a Gram matrix is given."""
    if len(u) != len(v):
        raise ValueError("dimension mismatch")
    if gram is None:
        s = ZERO
        for a, b in zip(u, v):
            s = s + a * b
        return s
    s = ZERO
    for i, a in enumerate(u):
        if not a:
            continue
        row = gram[i]
        for j, b in enumerate(v):
            if b:
                s = s + a * row[j] * b
    return s


def mat_identity(n) -> Mat:
    return tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))


def mat_mul(A, B) -> Mat:
    cols = list(zip(*B))
    return tuple(tuple(dot(row, col) for col in cols) for row in A)


def vec_mat(x, M):
    """Row vector times matrix."""
    out = [ZERO] * len(M[0])
    for i, c in enumerate(x):
        if not c:
            continue
        row = M[i]
        for j in range(len(out)):
            out[j] = out[j] + c * row[j]
    return tuple(out)


def mat_trace(M):
    s = ZERO
    for i in range(len(M)):
        s = s + M[i][i]
    return s


def mat_transpose(M) -> Mat:
    return tuple(zip(*M))


def mat_sub(A, B) -> Mat:
    return tuple(tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def mat_add(A, B) -> Mat:
    return tuple(tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def rref(rows):
    """Reduced row echelon form.  Returns (rows, pivot column list)."""
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, nrows):
            if m[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = m[r][c].inverse()
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return [tuple(row) for row in m[:r]], pivots


def mat_rank(rows):
    if not rows:
        return 0
    return len(rref(rows)[0])


def kernel(rows, ncols=None):
    """Basis (as rows) of {x : M x^T = 0} for the matrix with the given rows."""
    if not rows:
        if ncols is None:
            raise ValueError("need ncols for empty matrix")
        return [tuple(ONE if j == i else ZERO for j in range(ncols))
                for i in range(ncols)]
    n = len(rows[0])
    red, pivots = rref(rows)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [ZERO] * n
        v[fc] = ONE
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(tuple(v))
    return basis


def solve_coords(basis_rows, v):
    """Write v as a combination of the basis rows; returns coefficient tuple.

    Raises ValueError if v is not in the span.
    """
    if not basis_rows:
        if vec_is_zero(v):
            return ()
        raise ValueError("vector not in span")
    n = len(v)
    k = len(basis_rows)
    # solve x * B = v  <=>  B^T x^T = v^T ; eliminate on the augmented system
    aug = [[basis_rows[r][c] for r in range(k)] + [v[c]] for c in range(n)]
    red, pivots = rref(aug)
    coeffs = [ZERO] * k
    for row, pc in zip(red, pivots):
        if pc == k:
            raise ValueError("vector not in span")
        coeffs[pc] = row[k]
    # verify (guards against inconsistent rows below the pivots)
    chk = [ZERO] * n
    for c, b in zip(coeffs, basis_rows):
        if c:
            chk = [x + c * y for x, y in zip(chk, b)]
    if tuple(chk) != tuple(v):
        raise ValueError("vector not in span")
    return tuple(coeffs)


class Subspace:
    """A subspace of Q(sqrt5)^n in canonical reduced row echelon form."""

    __slots__ = ("rows", "n")

    def __init__(self, rows, n):
        red, _ = rref(rows) if rows else ([], [])
        self.rows = tuple(red)
        self.n = n

    @property
    def dim(self):
        return len(self.rows)

    def contains(self, v):
        if not self.rows:
            return vec_is_zero(v)
        try:
            solve_coords(self.rows, v)
            return True
        except ValueError:
            return False

    def contains_subspace(self, other):
        return all(self.contains(r) for r in other.rows)

    def intersect(self, other):
        """Intersection of two subspaces of the same ambient space."""
        if not self.rows or not other.rows:
            return Subspace([], self.n)
        stacked = list(self.rows) + [vec_neg(r) for r in other.rows]
        # coefficient vectors (a, b) with a*self + b*(-other) = 0
        coeff = kernel(list(zip(*stacked)), ncols=len(stacked))
        vecs = []
        for cf in coeff:
            v = [ZERO] * self.n
            for c, row in zip(cf[:self.dim], self.rows):
                if c:
                    v = [x + c * y for x, y in zip(v, row)]
            if not vec_is_zero(v):
                vecs.append(tuple(v))
        return Subspace(vecs, self.n)

    def perp(self, gram):
        """Orthogonal complement with respect to the bilinear form gram."""
        if not self.rows:
            return Subspace(list(mat_identity(self.n)), self.n)
        conditions = [vec_mat(r, gram) for r in self.rows]
        return Subspace(kernel(conditions, ncols=self.n), self.n)

    def __eq__(self, other):
        return isinstance(other, Subspace) and self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash((self.n, self.rows))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, n={self.n})"


def span(vectors, n):
    return Subspace(list(vectors), n)
