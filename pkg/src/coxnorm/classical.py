"""Explicit complement generators for the classical families.

For a standard parabolic with partition label lambda in type A, B or D, the
Howlett complement is generated by explicit signed permutations:

    x_i   swaps the blocks of two equal adjacent parts,
    y_i   negates and reverses one part (types B and D; in D only for even
          parts),
    z_i   negates and reverses an odd part and additionally negates the
          last sign-change-block point (type D with a block),
    y'_i = x_i y_i y_{i+1}  negates and reverses across two equal odd parts,
    z'_ij = y_i y_j         negates and reverses two distinct odd parts.

Parts are placed consecutively from the first point; the B_l / D_l block
occupies the last l points.  The generator sets below sort these elements
into the Q, A, B, C factors of the normalizer decomposition; the "-" class
of an even partition in type D is handled by conjugating everything with the
sign change of the last point (a graph automorphism of the chain placement).
"""

from __future__ import annotations

from .parabolic import Shape


def _compose(p, q):
    """Composite signed permutation: apply p first, then q."""
    out = []
    for v in range(1, len(p) + 1):
        t = p[v - 1]
        s = q[abs(t) - 1]
        out.append(s if t > 0 else -s)
    return tuple(out)


def _identity(n):
    return tuple(range(1, n + 1))


def _conjugate_by_last_flip(p):
    """tau p tau for tau = sign change of the last point."""
    n = len(p)
    tau = list(range(1, n + 1))
    tau[n - 1] = -n
    return _compose(_compose(tuple(tau), p), tuple(tau))


class ClassicalGenerators:
    """The x/y/z elements and the Q, A, B, C generator sets for one shape."""

    def __init__(self, rs, shape: Shape):
        fam = rs.label.family
        if fam not in ("A", "B", "D"):
            raise ValueError("classical generators exist only for A, B, D")
        if shape.partition is None:
            raise ValueError("shape carries no partition label")
        self.rs = rs
        self.shape = shape
        self.fam = fam
        self.pts = rs.label.rank + 1 if fam == "A" else rs.label.rank
        self.parts = list(shape.partition)
        self.m = sum(self.parts)
        self.l = self.pts - self.m  # block size (0 in type A)
        self.offsets = []
        u = 0
        for p in self.parts:
            self.offsets.append(u)
            u += p
        self._build()

    # -- the involutions -------------------------------------------------------

    def x(self, i):
        """Swap parts i and i+1 (0-based; requires equal adjacent parts)."""
        k = self.parts[i]
        if self.parts[i + 1] != k:
            raise ValueError("x needs two equal adjacent parts")
        u = self.offsets[i]
        img = list(_identity(self.pts))
        for v in range(u + 1, u + k + 1):
            img[v - 1] = v + k
            img[v + k - 1] = v
        return tuple(img)

    def y(self, i):
        """Negate and reverse part i."""
        u, k = self.offsets[i], self.parts[i]
        img = list(_identity(self.pts))
        for v in range(u + 1, u + k + 1):
            img[v - 1] = -(2 * u + k + 1 - v)
        return tuple(img)

    def z(self, i):
        """y(i) together with the sign change of the last block point.

        Negating the last point permutes the positive roots of the block, so
        the element has relative length zero and lies in the canonical
        complement (negating any earlier block point would not).
        """
        if self.l == 0:
            raise ValueError("z needs a sign-change block")
        img = list(self.y(i))
        img[self.pts - 1] = -self.pts
        return tuple(img)

    def y_prime(self, i):
        """Negate and reverse across equal parts i, i+1."""
        return _compose(self.x(i), _compose(self.y(i), self.y(i + 1)))

    def z_prime(self, i, j):
        """Negate and reverse the distinct odd parts i and j."""
        return _compose(self.y(i), self.y(j))

    # -- the generator sets -----------------------------------------------------

    def _build(self):
        parts = self.parts
        pairs = [i for i in range(len(parts) - 1) if parts[i] == parts[i + 1]]
        fam, l = self.fam, self.l
        Q, A, B, C = [], [], [], []
        if fam == "A":
            Q = [self.x(i) for i in pairs if parts[i] == 1]
            A = [self.x(i) for i in pairs if parts[i] > 1]
        elif fam == "B":
            Q = ([self.x(i) for i in pairs if parts[i] == 1]
                 + [self.y(j) for j in range(len(parts)) if parts[j] <= 2])
            A = ([self.x(i) for i in pairs if parts[i] > 2]
                 + [self.y(j) for j in range(len(parts)) if parts[j] > 2])
            B = [self.x(i) for i in pairs if parts[i] == 2]
        else:
            a1 = sum(1 for p in parts if p == 1)
            evens = all(p % 2 == 0 for p in parts)
            odd_idx = [j for j in range(len(parts)) if parts[j] % 2 == 1]
            if l == 0 and evens and parts:
                Q = [self.y(j) for j in range(len(parts)) if parts[j] == 2]
                A = ([self.x(i) for i in pairs if parts[i] > 2]
                     + [self.y(j) for j in range(len(parts)) if parts[j] > 2])
                B = [self.x(i) for i in pairs if parts[i] == 2]
            elif l >= 2:
                if a1 <= 1:
                    Q = [self.y(j) for j in range(len(parts)) if parts[j] == 2]
                    A = ([self.x(i) for i in pairs if parts[i] > 2]
                         + [self.y(j) for j in range(len(parts))
                            if parts[j] > 2 and parts[j] % 2 == 0]
                         + [self.z(j) for j in odd_idx])
                    B = [self.x(i) for i in pairs if parts[i] == 2]
                else:
                    ones = [i for i in pairs if parts[i] == 1]
                    Q = ([self.x(i) for i in ones]
                         + [self.y_prime(ones[0])]
                         + [self.y(j) for j in range(len(parts)) if parts[j] == 2])
                    A = ([self.x(i) for i in pairs if parts[i] > 2]
                         + [self.y(j) for j in range(len(parts))
                            if parts[j] > 2 and parts[j] % 2 == 0]
                         + [self.z(j) for j in odd_idx if parts[j] > 2])
                    # the last singleton: negating any earlier one is not
                    # length-zero for the D-part of Q on the free points
                    last_one = max(j for j in range(len(parts)) if parts[j] == 1)
                    B = ([self.x(i) for i in pairs if parts[i] == 2]
                         + [self.z(last_one)])
            else:
                # l == 0, some odd part
                even_pairs = [i for i in pairs if parts[i] > 2 and parts[i] % 2 == 0]
                odd_pairs = [i for i in pairs if parts[i] > 2 and parts[i] % 2 == 1]
                if a1 <= 1:
                    Q = [self.y(j) for j in range(len(parts)) if parts[j] == 2]
                    zp = [self.z_prime(p, q)
                          for pi, p in enumerate(odd_idx)
                          for q in odd_idx[pi + 1:]
                          if parts[p] != parts[q]]
                    A = ([self.x(i) for i in even_pairs]
                         + [self.y(j) for j in range(len(parts))
                            if parts[j] > 2 and parts[j] % 2 == 0]
                         + [self.x(i) for i in odd_pairs]
                         + [self.y_prime(i) for i in odd_pairs]
                         + zp)
                    B = [self.x(i) for i in pairs if parts[i] == 2]
                else:
                    ones = [i for i in pairs if parts[i] == 1]
                    Q = ([self.x(i) for i in ones]
                         + [self.y_prime(ones[0])]
                         + [self.y(j) for j in range(len(parts)) if parts[j] == 2])
                    zp = [self.z_prime(p, q)
                          for pi, p in enumerate(odd_idx)
                          for q in odd_idx[pi + 1:]
                          if parts[p] != parts[q] and parts[p] > 2 and parts[q] > 2]
                    A = ([self.x(i) for i in even_pairs]
                         + [self.y(j) for j in range(len(parts))
                            if parts[j] > 2 and parts[j] % 2 == 0]
                         + [self.x(i) for i in odd_pairs]
                         + [self.y_prime(i) for i in odd_pairs]
                         + zp)
                    B = [self.x(i) for i in pairs if parts[i] == 2]
                    big_odd = [j for j in odd_idx if parts[j] > 1]
                    if big_odd:
                        r = big_odd[-1]
                        last = len(parts) - 1
                        C = [self.z_prime(r, last)]
        if self.shape.decoration == "-":
            Q = [_conjugate_by_last_flip(p) for p in Q]
            A = [_conjugate_by_last_flip(p) for p in A]
            B = [_conjugate_by_last_flip(p) for p in B]
            C = [_conjugate_by_last_flip(p) for p in C]
        self.q_gens = Q
        self.a_gens = A
        self.b_gens = B
        self.c_gens = C

    def embedded(self, which):
        """The generator set as root permutations (GroupElements)."""
        return [self.rs.signed_permutation(p)
                for p in getattr(self, f"{which}_gens")]


def classical_complement_generators(rs, shape: Shape) -> ClassicalGenerators:
    """Generator record for the Q/A/B/C factors of a classical shape."""
    return ClassicalGenerators(rs, shape)
