"""Coxeter diagram recognition: simple systems, bonds, and type classification.

A subsystem of a root system is given by a closed set of root indices.  Its
simple system is extracted by the standard criterion (a positive root is
simple iff its reflection permutes the other positives of the subsystem),
bond orders are read off from exact inner products, and the graph is matched
against the classification.  B and C diagrams are not distinguished; the
rank-2 types with bonds 4, 5, 6 print as B2, H2, G2.
"""

from __future__ import annotations

from .labels import component_order, rank2_name
from .qsqrt5 import Q5


def close_roots(rs, indices):
    """Smallest set of roots closed under reflecting in each other."""
    S = set()
    for i in indices:
        S.add(i)
        S.add(rs.neg(i))
    frontier = list(S)
    while frontier:
        new = []
        for a in list(S):
            pa = rs.reflection_perm(a)
            for b in frontier:
                c = int(pa[b])
                if c not in S:
                    S.add(c)
                    new.append(c)
        frontier = new
    return frozenset(S)


def standard_subsystem(rs, subset):
    """All roots supported on the given simple indices (vector systems)."""
    subset = set(subset)
    out = set()
    for i in range(rs.npos):
        v = rs.root_vec(i)
        if all((j in subset) or not c for j, c in enumerate(v)):
            out.add(i)
            out.add(rs.neg(i))
    return frozenset(out)


def positive_part(rs, roots):
    return tuple(sorted(i for i in roots if i < rs.npos))


def subsystem_simples(rs, pos):
    """Simple system of a closed subsystem, given its positive roots."""
    pos_set = set(pos)
    simples = []
    for b in pos:
        perm = rs.reflection_perm(b)
        ok = True
        for a in pos:
            if a != b and int(perm[a]) not in pos_set:
                ok = False
                break
        if ok:
            simples.append(b)
    return tuple(simples)


_BOND_FROM_RATIO = {}


def bond_order(rs, i, j):
    """Order m(i,j) of the product of the reflections in roots i and j."""
    if not rs.is_vector:
        d = (i - j) % rs.m
        if d == 0:
            return 1
        # angle between reflections i and j is d*pi/m
        from math import gcd
        g = gcd(d, rs.m)
        return rs.m // g
    c = rs.inner(i, j)
    if not c:
        return 2
    ratio = (c * c * Q5(4)) / (rs.norm(i) * rs.norm(j))  # 4 cos^2(angle)
    m = bond_from_ratio(ratio)
    if m is None:
        raise ValueError(f"unrecognized bond ratio {ratio}")
    return m


def bond_from_ratio(ratio):
    """Bond order from 4cos^2 of the angle; all values realizable in Q(sqrt5)."""
    if not _BOND_FROM_RATIO:
        _BOND_FROM_RATIO.update({
            Q5(1): 3,
            Q5(2): 4,
            Q5(3): 6,
            Q5(3, 1, 2): 5,    # 4 cos^2(pi/5)
            Q5(3, -1, 2): 5,   # 4 cos^2(2pi/5), same product order
            Q5(5, 1, 2): 10,   # 4 cos^2(pi/10)
            Q5(5, -1, 2): 10,  # 4 cos^2(3pi/10)
        })
    return _BOND_FROM_RATIO.get(ratio)


def coxeter_graph(rs, simples):
    """Adjacency {i: {j: m}} over the given simple roots, bonds m >= 3 only."""
    adj = {i: {} for i in simples}
    for a in range(len(simples)):
        for b in range(a + 1, len(simples)):
            i, j = simples[a], simples[b]
            m = bond_order(rs, i, j)
            if m >= 3:
                adj[i][j] = m
                adj[j][i] = m
    return adj


def _classify_component(nodes, adj):
    """Name one connected component of a Coxeter graph."""
    k = len(nodes)
    if k == 1:
        return "A1"
    if k == 2:
        i, j = nodes
        return rank2_name(adj[i].get(j, 2))
    degrees = {i: len(adj[i]) for i in nodes}
    branch = [i for i in nodes if degrees[i] >= 3]
    bonds = sorted(m for i in nodes for j, m in adj[i].items() if i < j)
    if branch:
        if len(branch) > 1 or degrees[branch[0]] > 3 or any(m != 3 for m in bonds):
            raise ValueError("unclassifiable branched diagram")
        b = branch[0]
        arms = []
        for start in adj[b]:
            ln, prev, cur = 1, b, start
            while True:
                nxt = [x for x in adj[cur] if x != prev]
                if not nxt:
                    break
                prev, cur = cur, nxt[0]
                ln += 1
            arms.append(ln)
        arms.sort()
        if arms[:2] == [1, 1]:
            return f"D{k}"
        if arms == [1, 2, 2]:
            return "E6"
        if arms == [1, 2, 3]:
            return "E7"
        if arms == [1, 2, 4]:
            return "E8"
        raise ValueError(f"unclassifiable fork with arms {arms}")
    # a path; read the bond orders along it
    ends = [i for i in nodes if degrees[i] == 1]
    if len(ends) != 2:
        raise ValueError("diagram is not a path or fork")
    path = [ends[0]]
    prev = None
    while len(path) < k:
        cur = path[-1]
        nxt = [x for x in adj[cur] if x != prev]
        prev = cur
        path.append(nxt[0])
    orders = [adj[path[i]][path[i + 1]] for i in range(k - 1)]
    if all(m == 3 for m in orders):
        return f"A{k}"
    special = [(i, m) for i, m in enumerate(orders) if m != 3]
    if len(special) != 1:
        raise ValueError(f"unclassifiable path with bonds {orders}")
    pos, m = special[0]
    at_end = pos in (0, k - 2)
    if m == 4 and at_end:
        return f"B{k}"
    if m == 4 and k == 4:
        return "F4"
    if m == 5 and at_end and k in (3, 4):
        return f"H{k}"
    raise ValueError(f"unclassifiable path with bonds {orders}")


def component_nodes(adj):
    """Connected components of the graph, each as a sorted node list."""
    left = set(adj)
    comps = []
    while left:
        start = min(left)
        comp = {start}
        frontier = [start]
        while frontier:
            new = []
            for i in frontier:
                for j in adj[i]:
                    if j not in comp:
                        comp.add(j)
                        new.append(j)
            frontier = new
        left -= comp
        comps.append(sorted(comp))
    return comps


def recognize_subsystem(rs, roots):
    """Component type names (sorted) of a closed subsystem of rs."""
    pos = positive_part(rs, roots)
    if not pos:
        return ()
    simples = subsystem_simples(rs, pos)
    adj = coxeter_graph(rs, simples)
    names = [_classify_component(c, adj) for c in component_nodes(adj)]
    return tuple(sorted(names, key=_component_sort_key))


def _component_sort_key(name):
    if name.startswith("I2("):
        return (-2, "I", int(name[3:-1]))
    return (-int(name[1:]), name[0], 0)


def components_string(names):
    """Canonical printed form of a component multiset, e.g. A3A1^2."""
    if not names:
        return "∅"
    out = []
    i = 0
    names = sorted(names, key=_component_sort_key)
    while i < len(names):
        j = i
        while j < len(names) and names[j] == names[i]:
            j += 1
        out.append(names[i] + (f"^{j - i}" if j - i > 1 else ""))
        i = j
    return "".join(out)


def components_order(names):
    n = 1
    for name in names:
        n *= component_order(name)
    return n


def components_rank(names):
    r = 0
    for name in names:
        r += 2 if name.startswith("I2(") or name in ("G2", "H2") else int(name[1:])
    return r
