"""Parabolic subgroups, fixed spaces, parabolic closure, and shapes.

A reflection subgroup is stored by its closed set of roots; a parabolic
subgroup additionally carries the subspace it pointwise stabilizes (its
witness).  The shape catalog lists one entry per conjugacy class of parabolic
subgroups, ordered by (rank, group order, label); indices are 1-based.

Classical labels follow the partition transversal: type A uses partitions of
the point count; types B and D use a sign-change block B_l / D_l plus a
partition of the permuted points, with D2 and D3 kept as block labels.  Even
partitions of n in type D give two classes, distinguished as "+" and "-";
"+" is the class containing the representative built on consecutive chain
nodes starting at the first one.  Non-conjugate classes with equal type
strings in the exceptional groups are distinguished by primes in catalog
order of their representatives.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagrams import (close_roots, components_order, components_rank,
                       components_string, positive_part, recognize_subsystem,
                       standard_subsystem, subsystem_simples)
from .groups import GroupElement
from .linalg import Subspace, mat_identity
from .qsqrt5 import ZERO


class ReflectionSubgroup:
    """A subgroup generated by reflections, stored by its closed root set."""

    def __init__(self, rs, roots, generators=None):
        self.rs = rs
        self.roots = frozenset(roots)
        self.gen_roots = tuple(sorted(generators)) if generators is not None else None
        self.pos = positive_part(rs, self.roots)
        self._simples = None
        self._components = None

    @classmethod
    def generated_by(cls, rs, root_indices):
        if not root_indices:
            return cls(rs, frozenset())
        return cls(rs, close_roots(rs, root_indices), generators=root_indices)

    @classmethod
    def standard(cls, rs, subset):
        if rs.is_vector:
            return cls(rs, standard_subsystem(rs, subset), generators=subset)
        subset = tuple(sorted(subset))
        m = rs.m
        simple_roots = {0: 0, 1: m - 1}
        gens = [simple_roots[i] for i in subset]
        return cls.generated_by(rs, gens)

    @property
    def simples(self):
        if self._simples is None:
            self._simples = subsystem_simples(self.rs, self.pos)
        return self._simples

    @property
    def components(self):
        if self._components is None:
            self._components = recognize_subsystem(self.rs, self.roots)
        return self._components

    @property
    def order(self):
        return components_order(self.components)

    @property
    def rank(self):
        return components_rank(self.components)

    def reflections(self):
        return [self.rs.reflection(i) for i in self.pos]

    def simple_reflections(self):
        return [self.rs.reflection(i) for i in self.simples]

    def type_string(self):
        return components_string(self.components)

    def key(self):
        return (self.rs.label, self.roots)

    def __eq__(self, other):
        return isinstance(other, ReflectionSubgroup) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"ReflectionSubgroup({self.rs.label}, {self.type_string()})"


class I2Line:
    """A line in the I2 plane, by its double-angle residue mod 2m.

    The line spanned by root k has residue 2k; the reflecting axis of the
    reflection in root k has residue 2k + m.
    """

    __slots__ = ("t", "m")

    def __init__(self, t, m):
        self.t = t % (2 * m)
        self.m = m

    def __eq__(self, other):
        return isinstance(other, I2Line) and (self.t, self.m) == (other.t, other.m)

    def __hash__(self):
        return hash((self.t, self.m))


class I2Subspace:
    """Token subspace of the I2 plane: zero, a line, or everything."""

    __slots__ = ("kind", "line", "m")

    def __init__(self, kind, m, line=None):
        self.kind = kind      # "zero" | "line" | "full"
        self.m = m
        self.line = line

    @property
    def dim(self):
        return {"zero": 0, "line": 1, "full": 2}[self.kind]

    def __eq__(self, other):
        return (isinstance(other, I2Subspace)
                and (self.kind, self.m, self.line) == (other.kind, other.m, other.line))

    def __hash__(self):
        return hash((self.kind, self.m, self.line))

    def __repr__(self):
        return f"I2Subspace({self.kind})"


@dataclass(frozen=True)
class ParabolicSubgroup:
    """A reflection subgroup together with the subspace it pointwise fixes."""

    sub: ReflectionSubgroup
    witness: object  # Subspace, or I2Subspace for family I

    @property
    def rs(self):
        return self.sub.rs

    @property
    def roots(self):
        return self.sub.roots

    @property
    def pos(self):
        return self.sub.pos

    @property
    def simples(self):
        return self.sub.simples

    @property
    def components(self):
        return self.sub.components

    @property
    def order(self):
        return self.sub.order

    def __repr__(self):
        return f"ParabolicSubgroup({self.rs.label}, {self.sub.type_string()})"


def fixed_space(U: ReflectionSubgroup):
    """Common fixed space of a reflection subgroup (intersection of its walls)."""
    rs = U.rs
    if rs.is_vector:
        return rs.span(U.pos).perp(rs.gram)
    r = rs.span_rank(U.pos)
    if r == 0:
        return I2Subspace("full", rs.m)
    if r == 1:
        k = U.pos[0] % rs.m
        return I2Subspace("line", rs.m, I2Line(2 * k + rs.m, rs.m))
    return I2Subspace("zero", rs.m)


def pointwise_stabilizer(rs, X) -> ParabolicSubgroup:
    """Parabolic subgroup fixing the subspace X pointwise."""
    if rs.is_vector:
        if X.n != rs.n:
            raise ValueError("subspace of wrong ambient dimension")
        from .linalg import dot, vec_mat
        conditions = [vec_mat(row, rs.gram) for row in X.rows]
        roots = set()
        for i in range(rs.npos):
            v = rs.root_vec(i)
            if all(not dot(cond, v) for cond in conditions):
                roots.add(i)
                roots.add(rs.neg(i))
        sub = ReflectionSubgroup(rs, frozenset(roots))
        return ParabolicSubgroup(sub, X)
    m = rs.m
    if X.kind == "full":
        return ParabolicSubgroup(ReflectionSubgroup(rs, frozenset()), X)
    if X.kind == "zero":
        roots = frozenset(range(rs.nroots))
        return ParabolicSubgroup(ReflectionSubgroup(rs, roots), X)
    # a line is pointwise fixed only by the reflection whose axis it is
    t = X.line.t
    roots = set()
    if (t - m) % 2 == 0:
        k = ((t - m) // 2) % m
        roots = {k, rs.neg(k)}
    return ParabolicSubgroup(ReflectionSubgroup(rs, frozenset(roots)), X)


def parabolic_closure(U: ReflectionSubgroup) -> ParabolicSubgroup:
    """Smallest parabolic subgroup containing U."""
    return pointwise_stabilizer(U.rs, fixed_space(U))


def parabolic_from_roots(rs, roots) -> ParabolicSubgroup:
    sub = ReflectionSubgroup(rs, roots)
    return ParabolicSubgroup(sub, fixed_space(sub))


def standard_parabolic(rs, subset) -> ParabolicSubgroup:
    sub = ReflectionSubgroup.standard(rs, subset)
    return ParabolicSubgroup(sub, fixed_space(sub))


def fixes_pointwise(w: GroupElement, X) -> bool:
    """Does the element fix the subspace pointwise?"""
    rs = w.rs
    if isinstance(X, I2Subspace):
        if X.kind == "zero":
            return True
        if X.kind == "full":
            return w.is_identity()
        t, m = X.line.t, X.line.m
        if w.is_identity():
            return True
        if (t - m) % 2 == 0:
            k = ((t - m) // 2) % m
            return w == rs.reflection(k)
        return False
    for row in X.rows:
        img = apply_to_vector(w, row)
        if img != tuple(row):
            return False
    return True


def apply_to_vector(w: GroupElement, v):
    """Image of a coordinate vector under w (right action)."""
    rs = w.rs
    out = [ZERO] * rs.n
    for i, c in enumerate(v):
        if not c:
            continue
        tgt = rs.root_vec(int(w.img[i]))
        for j, x in enumerate(tgt):
            if x:
                out[j] = out[j] + c * x
    return tuple(out)


def element_in_parabolic(w: GroupElement, P: ParabolicSubgroup) -> bool:
    return fixes_pointwise(w, P.witness)


# ---------------------------------------------------------------------------
# Shapes


@dataclass(frozen=True)
class Shape:
    """One conjugacy class of parabolic subgroups."""

    index: int                    # 1-based position in the catalog
    rep_subset: tuple             # simple indices of the standard representative
    roots: frozenset              # root set of the representative
    components: tuple             # diagram component names
    label: str                    # full label incl. primes/sign and partition
    type_label: str               # label without the partition suffix
    order: int
    rank: int
    block: tuple | None = None    # ("B"|"D", l) for classical types
    partition: tuple | None = None
    decoration: str = ""          # "", "'", "''", "+", "-"

    def __str__(self):
        return self.label


def _partition_string(parts):
    return "[" + " ".join(str(p) for p in parts) + "]"


def _decorated(type_str, decoration):
    if not decoration:
        return type_str
    composite = sum(1 for ch in type_str if ch.isupper()) > 1 or "^" in type_str
    if composite:
        return f"({type_str}){decoration}"
    return type_str + decoration


def _classical_transversal(rs):
    """(label data, subset) pairs for the classical partition transversal."""
    fam = rs.label.family
    n = rs.label.rank

    def partitions(k):
        def gen(k, mx):
            if k == 0:
                yield ()
                return
            for p in range(min(k, mx), 0, -1):
                for rest in gen(k - p, p):
                    yield (p,) + rest
        return list(gen(k, k))

    out = []
    if fam == "A":
        pts = n + 1
        for lam in partitions(pts):
            subset = _chain_subset(lam, 0)
            out.append((("A", 0, lam, ""), subset))
        return out
    pts = n
    if fam == "B":
        ms = range(0, n + 1)
    else:
        ms = [m for m in range(0, n + 1) if m != n - 1]
    for m in ms:
        block = tuple(range(m, n)) if m < n else ()
        for lam in partitions(m):
            subset = _chain_subset(lam, 0) + block
            if fam == "D" and m == n and lam and all(p % 2 == 0 for p in lam):
                out.append((("D", 0, lam, "+"), subset))
                minus = tuple(sorted(set(subset) - {n - 2} | {n - 1}))
                out.append((("D", 0, lam, "-"), minus))
            else:
                out.append(((fam, n - m, lam, ""), subset))
    return out


def _chain_subset(lam, start):
    """Chain nodes for parts placed consecutively from the given point."""
    nodes = []
    p = start
    for part in lam:
        nodes.extend(range(p, p + part - 1))
        p += part
    return tuple(nodes)


def _classical_label(fam, l, lam, decoration, n):
    ordered = [f"{fam}{l}"] if l > 0 else []
    ordered += [f"A{p - 1}" for p in sorted(lam, reverse=True) if p >= 2]
    out = []
    i = 0
    while i < len(ordered):
        j = i
        while j < len(ordered) and ordered[j] == ordered[i]:
            j += 1
        out.append(ordered[i] + (f"^{j - i}" if j - i > 1 else ""))
        i = j
    type_str = "".join(out) if out else "∅"
    pts = n + 1 if fam == "A" else n
    full = tuple(sorted(lam, reverse=True)) + (1,) * (pts - l - sum(lam))
    type_dec = _decorated(type_str, decoration)
    label = f"{type_dec} {_partition_string(full)}"
    return type_dec, label, full


class ShapeCatalog:
    """All shapes of one group, with class lookup for arbitrary subsystems."""

    def __init__(self, rs):
        self.rs = rs
        self.shapes = []
        self._by_rootset = {}
        self._class_cache = {}
        self._build()

    def __len__(self):
        return len(self.shapes)

    def __iter__(self):
        return iter(self.shapes)

    def __getitem__(self, index):
        return self.shapes[index - 1]

    def _invariant(self, roots):
        comps = recognize_subsystem(self.rs, roots)
        if self.rs.is_vector:
            norms = tuple(sorted(repr(self.rs.norm(i)) for i in positive_part(self.rs, roots)))
        else:
            norms = ()
        return (comps, norms)

    def _build(self):
        rs = self.rs
        n = rs.n
        subsets = []
        for mask in range(1 << n):
            subset = tuple(i for i in range(n) if mask >> i & 1)
            subsets.append(subset)
        rootsets = {s: ReflectionSubgroup.standard(rs, s).roots for s in subsets}
        buckets = {}
        for s in subsets:
            buckets.setdefault(self._invariant(rootsets[s]), []).append(s)
        gens = rs.simple_reflections()
        classes = []  # list of (members, rep_roots)
        for inv in sorted(buckets, key=repr):
            members = buckets[inv]
            remaining = {tuple(sorted(rootsets[s])): s for s in members}
            while remaining:
                seed_key = sorted(remaining)[0]
                seed = remaining.pop(seed_key)
                group = [seed]
                if remaining:
                    hits = self._orbit_collect(gens, seed_key, set(remaining))
                    for h in hits:
                        group.append(remaining.pop(h))
                classes.append(group)
        entries = []
        for group in classes:
            rep = sorted(group)[0]
            entries.append((rep, group))
        # labels
        labeled = []
        if rs.label.family in ("A", "B", "D"):
            trans = _classical_transversal(rs)
            lookup = {}
            for (fam, l, lam, dec), subset in trans:
                key = tuple(sorted(subset))
                lookup[key] = (fam, l, lam, dec)
            claimed = {}
            for rep, group in entries:
                data = None
                for member in group:
                    k = tuple(sorted(member))
                    if k in lookup:
                        if data is not None:
                            raise RuntimeError(
                                f"two transversal labels in one class of {rs.label}")
                        data = lookup[k]
                if data is None:
                    raise RuntimeError(f"class without transversal label in {rs.label}")
                if data in claimed:
                    raise RuntimeError(f"duplicate transversal label {data} in {rs.label}")
                claimed[data] = True
                fam, l, lam, dec = data
                roots = rootsets[rep]
                comps = recognize_subsystem(rs, roots)
                type_str, label, full = _classical_label(fam, l, lam, dec, rs.label.rank)
                labeled.append(Shape(0, rep, roots, comps, label, type_str,
                                     components_order(comps), components_rank(comps),
                                     (fam, l), tuple(lam), dec))
        else:
            by_type = {}
            for rep, group in entries:
                roots = rootsets[rep]
                comps = recognize_subsystem(rs, roots)
                by_type.setdefault(comps, []).append((rep, roots))
            for comps, reps in sorted(by_type.items(), key=repr):
                reps.sort()
                primes = ["'", "''", "'''"]
                for k, (rep, roots) in enumerate(reps):
                    dec = primes[k] if len(reps) > 1 else ""
                    type_str = components_string(comps)
                    labeled.append(Shape(0, rep, roots, comps, _decorated(type_str, dec),
                                         _decorated(type_str, dec),
                                         components_order(comps), components_rank(comps),
                                         None, None, dec))
        labeled.sort(key=lambda s: (s.rank, s.order, s.label))
        self.shapes = [Shape(i + 1, s.rep_subset, s.roots, s.components, s.label,
                             s.type_label, s.order, s.rank, s.block, s.partition,
                             s.decoration)
                       for i, s in enumerate(labeled)]
        for s in self.shapes:
            self._by_rootset[tuple(sorted(s.roots))] = s.index
            self._class_cache[tuple(sorted(s.roots))] = s.index

    def _orbit_collect(self, gens, seed_key, targets):
        """BFS the orbit of a root set, returning the targets encountered."""
        import numpy as np
        seen = {seed_key}
        frontier = [seed_key]
        found = set()
        targets = set(targets)
        while frontier and targets - found:
            new = []
            for key in frontier:
                arr = np.array(key, dtype=np.int16)
                for g in gens:
                    nxt = tuple(int(x) for x in np.sort(g.img[arr]))
                    if nxt not in seen:
                        seen.add(nxt)
                        new.append(nxt)
                        if nxt in targets:
                            found.add(nxt)
            frontier = new
        return found

    # -- class lookup -------------------------------------------------------

    def class_of_roots(self, roots) -> int:
        """Catalog index of the class of a closed subsystem."""
        key = tuple(sorted(roots))
        hit = self._class_cache.get(key)
        if hit is not None:
            return hit
        inv = self._invariant(roots)
        candidates = [s for s in self.shapes if self._invariant(s.roots) == inv]
        if not candidates:
            raise ValueError("subsystem matches no catalog class")
        if len(candidates) == 1:
            self._class_cache[key] = candidates[0].index
            return candidates[0].index
        # conjugacy walk from the query to one of the candidate representatives
        import numpy as np
        gens = self.rs.simple_reflections()
        target_keys = {tuple(sorted(s.roots)): s.index for s in candidates}
        seen = {key}
        frontier = [key]
        while frontier:
            for k in frontier:
                if k in target_keys:
                    self._class_cache[key] = target_keys[k]
                    return target_keys[k]
            new = []
            for k in frontier:
                arr = np.array(k, dtype=np.int16)
                for g in gens:
                    nxt = tuple(int(x) for x in np.sort(g.img[arr]))
                    if nxt not in seen:
                        seen.add(nxt)
                        new.append(nxt)
            frontier = new
        raise RuntimeError("subsystem not conjugate to any catalog representative")

    def shape_of(self, P: ParabolicSubgroup) -> Shape:
        return self[self.class_of_roots(P.roots)]

    def by_selector(self, text: str) -> Shape:
        """Find a shape by index, label, type string, or partition."""
        text = text.strip()
        if text.isdigit():
            idx = int(text)
            if 1 <= idx <= len(self.shapes):
                return self[idx]
            raise KeyError(text)
        compact = text.replace(" ", "")
        matches = []
        for s in self.shapes:
            cands = {s.label.replace(" ", ""), s.type_label.replace(" ", "")}
            if s.partition is not None:
                pstr = "[" + "".join(str(p) for p in s.partition) + "]"
                pstr2 = "[" + " ".join(str(p) for p in s.partition) + "]"
                cands.add(pstr)
                cands.add(pstr2.replace(" ", ""))
                cands.add((s.type_label + pstr).replace(" ", ""))
            if compact in cands:
                matches.append(s)
        if len(matches) == 1:
            return matches[0]
        if not matches:
            raise KeyError(text)
        raise KeyError(f"ambiguous selector {text!r}: matches "
                       + ", ".join(s.label for s in matches))


_catalogs = {}


def shape_catalog(rs) -> ShapeCatalog:
    if rs.label not in _catalogs:
        _catalogs[rs.label] = ShapeCatalog(rs)
    return _catalogs[rs.label]


def shapes(rs):
    """The ordered shape catalog (one entry per conjugacy class)."""
    return list(shape_catalog(rs))


def shape_of(P: ParabolicSubgroup) -> Shape:
    return shape_catalog(P.rs).shape_of(P)
