"""Exact root systems for all finite Coxeter types.

Vectors live in the basis of simple roots over Q(sqrt5), with the bilinear
form given by the Gram matrix of the chosen simple system.  Normalization:
long roots have norm 2 in the crystallographic types (B keeps two lengths,
short roots norm 1), and the H types are normalized to norm 2 with -phi on
the 5-bond.  In this basis a vector is a positive root iff all coordinates
are >= 0, and the simple roots are the unit coordinate vectors.

Indexing: positive roots come first (the n simple roots are indices 0..n-1),
and the negative of root i is i + npos (mod 2*npos), so sign flips are O(1).

Type I2(m) is not embedded in coordinates.  Its roots are indexed by residues
mod 2m (root k at angle k*pi/m); reflections and rotations act by index
arithmetic, and two reflections are orthogonal iff m is even and their
indices differ by m/2 mod m.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .groups import GroupElement
from .labels import CoxeterLabel, parse_label
from .linalg import Subspace, dot, vec
from .qsqrt5 import ONE, PHI, Q5, ZERO


def _gram_matrix(label: CoxeterLabel):
    """Gram matrix of the simple system, Bourbaki numbering."""
    n = label.rank
    fam = label.family
    G = [[ZERO] * n for _ in range(n)]

    def bond(i, j, val):
        G[i][j] = val
        G[j][i] = val

    for i in range(n):
        G[i][i] = Q5(2)
    if fam == "A":
        for i in range(n - 1):
            bond(i, i + 1, Q5(-1))
    elif fam == "B":
        # nodes 0..n-2 long, node n-1 short (norm 1); 4-bond at the end
        G[n - 1][n - 1] = ONE
        for i in range(n - 2):
            bond(i, i + 1, Q5(-1))
        bond(n - 2, n - 1, Q5(-1))
    elif fam == "D":
        for i in range(n - 2):
            bond(i, i + 1, Q5(-1))
        bond(n - 3, n - 1, Q5(-1))
    elif fam == "E":
        # chain 1-3-4-5-6(-7-8) with node 2 on node 4 (0-based: 0-2-3-4-5..)
        chain = [0, 2, 3, 4, 5, 6, 7][: n - 1]
        for a, b in zip(chain, chain[1:]):
            bond(a, b, Q5(-1))
        bond(1, 3, Q5(-1))
    elif fam == "F":
        # 0-1=2-3 with 0,1 long and 2,3 short
        G[2][2] = ONE
        G[3][3] = ONE
        bond(0, 1, Q5(-1))
        bond(1, 2, Q5(-1))
        bond(2, 3, Q5(-1, 0, 2))
    elif fam == "H":
        bond(0, 1, -PHI)
        for i in range(1, n - 1):
            bond(i, i + 1, Q5(-1))
    else:
        raise ValueError(f"no Gram matrix for family {fam}")
    return tuple(tuple(row) for row in G)


def _e_basis(label: CoxeterLabel):
    """Simple roots in coordinate (e_i) form for the classical families.

    Used to bridge between signed permutations of points and root
    permutations.  Returns (number of points, list of simple-root e-vectors).
    """
    n = label.rank
    fam = label.family
    if fam == "A":
        pts = n + 1
        rows = []
        for i in range(n):
            v = [0] * pts
            v[i], v[i + 1] = 1, -1
            rows.append(tuple(v))
        return pts, rows
    if fam in ("B", "D"):
        pts = n
        rows = []
        for i in range(n - 1):
            v = [0] * pts
            v[i], v[i + 1] = 1, -1
            rows.append(tuple(v))
        last = [0] * pts
        if fam == "B":
            last[n - 1] = 1
        else:
            last[n - 2], last[n - 1] = 1, 1
        rows.append(tuple(last))
        return pts, rows
    raise ValueError("e-basis only for classical families")


class RootSystem:
    """A root system with exact coordinates (all families except I)."""

    is_vector = True

    def __init__(self, label: CoxeterLabel):
        if label.family == "I":
            raise ValueError("use I2RootSystem for family I")
        self.label = label
        self.n = label.rank
        self.gram = _gram_matrix(label)
        self._build_roots()
        self._refl_cache = {}
        self._orth = None
        self._e_coords = None
        self._norms = [dot(v, v, self.gram) for v in self.vectors[: self.npos]]

    # -- construction ------------------------------------------------------

    def _simple_reflect_vec(self, v, i):
        # s_i in simple-root coordinates changes only coordinate i
        num = dot(v, self._unit(i), self.gram)
        c = (num + num) / self.gram[i][i]
        w = list(v)
        w[i] = w[i] - c
        return tuple(w)

    def _unit(self, i):
        v = [ZERO] * self.n
        v[i] = ONE
        return tuple(v)

    def _build_roots(self):
        n = self.n
        simples = [self._unit(i) for i in range(n)]
        seen = set(simples)
        frontier = list(simples)
        while frontier:
            new = []
            for v in frontier:
                for i in range(n):
                    w = self._simple_reflect_vec(v, i)
                    if w not in seen:
                        seen.add(w)
                        new.append(w)
            frontier = new
        positives = [v for v in seen if all(c >= ZERO for c in v)]
        rest = sorted((v for v in positives if v not in set(simples)),
                      key=lambda v: tuple((c.a, c.b, c.den) for c in v))
        pos = simples + rest
        self.npos = len(pos)
        self.nroots = 2 * self.npos
        self.vectors = pos + [tuple(-c for c in v) for v in pos]
        self.index = {v: i for i, v in enumerate(self.vectors)}
        want = self.label.n_positive_roots
        if self.npos != want:
            raise RuntimeError(f"{self.label}: built {self.npos} positive roots, expected {want}")

    # -- basic queries -------------------------------------------------------

    def neg(self, i):
        return (i + self.npos) % self.nroots

    def root_vec(self, i):
        return self.vectors[i]

    def inner(self, i, j):
        return dot(self.vectors[i], self.vectors[j], self.gram)

    def norm(self, i):
        return self._norms[i % self.npos]

    def orthogonal(self, i, j):
        if self._orth is None:
            npos = self.npos
            tbl = np.zeros((npos, npos), dtype=bool)
            for a in range(npos):
                for b in range(a + 1, npos):
                    if not self.inner(a, b):
                        tbl[a, b] = tbl[b, a] = True
            self._orth = tbl
        return bool(self._orth[i % self.npos, j % self.npos])

    def span_rank(self, indices):
        from .linalg import mat_rank
        rows = [self.vectors[i] for i in indices]
        return mat_rank(rows) if rows else 0

    def span(self, indices) -> Subspace:
        return Subspace([self.vectors[i] for i in indices], self.n)

    # -- reflections and generators ------------------------------------------

    def reflection_perm(self, i):
        """Image array of the reflection in root i (cached)."""
        i = i % self.npos
        perm = self._refl_cache.get(i)
        if perm is None:
            alpha = self.vectors[i]
            nn = self.gram and dot(alpha, alpha, self.gram)
            perm = np.empty(self.nroots, dtype=np.int16)
            for j in range(self.npos):
                v = self.vectors[j]
                num = dot(v, alpha, self.gram)
                c = (num + num) / nn
                w = tuple(x - c * a for x, a in zip(v, alpha))
                k = self.index[w]
                perm[j] = k
                perm[self.neg(j)] = self.neg(k)
            self._refl_cache[i] = perm
        return perm

    def reflection(self, i) -> GroupElement:
        return GroupElement(self, self.reflection_perm(i).copy())

    def simple_reflections(self):
        return [self.reflection(i) for i in range(self.n)]

    @property
    def group_order(self):
        return self.label.order

    # -- classical coordinates -------------------------------------------------

    def e_coords(self):
        """Map root index -> integer e-coordinate tuple (classical families)."""
        if self._e_coords is None:
            pts, simple_rows = _e_basis(self.label)
            coords = []
            for v in self.vectors:
                acc = [Fraction(0)] * pts
                for c, row in zip(v, simple_rows):
                    if c:
                        f = Fraction(c.a, c.den)
                        for k, x in enumerate(row):
                            if x:
                                acc[k] += f * x
                coords.append(tuple(int(x) for x in acc))
            self._e_coords = coords
        return self._e_coords

    def signed_permutation(self, images) -> GroupElement:
        """Element from a signed permutation of the points 1..N.

        ``images[v-1]`` is the signed image of point v; for family A all
        images are positive.  Family D requires an even number of sign flips.
        """
        coords = self.e_coords()
        pts = len(coords[0])
        if len(images) != pts:
            raise ValueError("signed permutation has wrong number of points")
        if sorted(abs(x) for x in images) != list(range(1, pts + 1)):
            raise ValueError("not a signed permutation")
        if self.label.family == "A" and any(x < 0 for x in images):
            raise ValueError("type A admits no sign flips")
        if self.label.family == "D" and sum(1 for x in images if x < 0) % 2:
            raise ValueError("type D requires an even number of sign flips")
        lookup = {c: i for i, c in enumerate(coords)}
        img = np.empty(self.nroots, dtype=np.int16)
        for i, c in enumerate(coords[: self.npos]):
            out = [0] * pts
            for k, x in enumerate(c):
                if x:
                    t = images[k]
                    out[abs(t) - 1] += x if t > 0 else -x
            j = lookup[tuple(out)]
            img[i] = j
            img[self.neg(i)] = self.neg(j)
        return GroupElement(self, img)

    def __repr__(self):
        return f"RootSystem({self.label})"


class I2RootSystem:
    """Dihedral rank-2 system realized combinatorially mod 2m."""

    is_vector = False

    def __init__(self, label: CoxeterLabel):
        if label.family != "I":
            raise ValueError("I2RootSystem is only for family I")
        self.label = label
        self.n = 2
        self.m = label.m
        self.npos = self.m
        self.nroots = 2 * self.m
        self._refl_cache = {}

    def neg(self, i):
        return (i + self.npos) % self.nroots

    def orthogonal(self, i, j):
        if self.m % 2:
            return False
        return (i - j) % self.m == self.m // 2

    def span_rank(self, indices):
        classes = {i % self.m for i in indices}
        return min(len(classes), 2)

    def reflection_perm(self, i):
        i = i % self.npos
        perm = self._refl_cache.get(i)
        if perm is None:
            k = np.arange(self.nroots)
            perm = ((2 * i + self.m - k) % self.nroots).astype(np.int16)
            self._refl_cache[i] = perm
        return perm

    def reflection(self, i) -> GroupElement:
        return GroupElement(self, self.reflection_perm(i).copy())

    def simple_reflections(self):
        # simple roots: indices 0 and m-1 (angles 0 and pi - pi/m)
        return [self.reflection(0), self.reflection(self.m - 1)]

    @property
    def group_order(self):
        return self.label.order

    def __repr__(self):
        return f"I2RootSystem({self.m})"


_CACHE = {}


def build_root_system(label):
    """Construct (and memoize) the root system for a label or label string."""
    if isinstance(label, str):
        label = parse_label(label)
    if label not in _CACHE:
        _CACHE[label] = I2RootSystem(label) if label.family == "I" else RootSystem(label)
    return _CACHE[label]


def inner_product(rs: RootSystem, v, w):
    """Exact inner product of two coordinate vectors of rs."""
    if not rs.is_vector:
        raise ValueError("I2 systems carry no coordinate vectors")
    if len(v) != len(w) or len(v) != rs.n:
        raise ValueError("dimension mismatch")
    return dot(vec(v), vec(w), rs.gram)


def reflection_in_root(rs, root_index) -> GroupElement:
    """The reflection in the given root, as a root permutation."""
    if not 0 <= root_index < rs.nroots:
        raise ValueError(f"root index {root_index} out of range")
    return rs.reflection(root_index)
