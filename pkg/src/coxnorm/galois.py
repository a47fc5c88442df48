"""The orthogonality Galois connection on parabolic subgroups.

Two distinct reflections are orthogonal iff they commute iff their roots are
perpendicular.  The orthogonal complement of a reflection subgroup U is the
subgroup generated by all reflections orthogonal to every reflection of U;
it is always parabolic, and U -> perp(U) is a Galois connection whose closure
operator is perp(perp(.)).  A pair of mutually complementary orthogonally
closed parabolics is a parabolic concept.

Orthogonality is tested by exact inner products of roots; the commutation
characterization lives in the oracle module as an independent cross-check.
"""

from __future__ import annotations

from .parabolic import (ParabolicSubgroup, ReflectionSubgroup, Shape,
                        parabolic_from_roots, shape_catalog)


def orthogonal_complement(U: ReflectionSubgroup | ParabolicSubgroup) -> ParabolicSubgroup:
    """Parabolic generated by all reflections orthogonal to every reflection of U."""
    sub = U.sub if isinstance(U, ParabolicSubgroup) else U
    rs = sub.rs
    roots = set()
    for i in range(rs.npos):
        if all(rs.orthogonal(i, j) for j in sub.pos):
            roots.add(i)
            roots.add(rs.neg(i))
    return parabolic_from_roots(rs, frozenset(roots))


def orthogonal_closure(P: ParabolicSubgroup | ReflectionSubgroup) -> ParabolicSubgroup:
    """perp(perp(P)); contains P, idempotent."""
    return orthogonal_complement(orthogonal_complement(P))


def is_orthogonally_closed(P: ParabolicSubgroup) -> bool:
    return orthogonal_closure(P).roots == P.roots


def perp_index(catalog, shape: Shape) -> int:
    """Catalog index of the orthogonal complement of a shape."""
    rep = ParabolicSubgroup(ReflectionSubgroup(catalog.rs, shape.roots), None)
    return catalog.class_of_roots(orthogonal_complement(rep).roots)


def closure_index(catalog, shape: Shape) -> int:
    rep = ParabolicSubgroup(ReflectionSubgroup(catalog.rs, shape.roots), None)
    return catalog.class_of_roots(orthogonal_closure(rep).roots)


def parabolic_concepts(rs):
    """All parabolic concepts up to conjugacy, as shape index pairs (i <= j).

    A concept is a pair of shapes whose representatives are mutual orthogonal
    complements, both orthogonally closed.  Each unordered pair is listed
    once, with the smaller catalog index on the left.
    """
    catalog = shape_catalog(rs)
    perp = {s.index: perp_index(catalog, s) for s in catalog}
    out = []
    for s in catalog:
        i, j = s.index, perp[s.index]
        if perp[j] == i and i <= j:
            out.append((i, j))
    return sorted(out)


def shape_closure_graph(rs):
    """Shape poset Hasse diagram plus closure edges.

    Returns a dict with nodes (index, label, closed flag), hasse edges
    (i covers j, i above), and closure edges (i -> closure of i) for the
    non-closed shapes.
    """
    catalog = shape_catalog(rs)
    below = {s.index: set() for s in catalog}  # strictly contained classes
    for s in catalog:
        rep = s.rep_subset
        seen = set()
        for mask in range(1 << len(rep)):
            subset = tuple(rep[k] for k in range(len(rep)) if mask >> k & 1)
            sub = ReflectionSubgroup.standard(rs, subset)
            idx = catalog.class_of_roots(sub.roots)
            if idx != s.index:
                seen.add(idx)
        below[s.index] = seen
    hasse = []
    for s in catalog:
        covered = set(below[s.index])
        for j in below[s.index]:
            covered -= below[j]
        for j in sorted(covered):
            hasse.append((s.index, j))
    closure = {}
    for s in catalog:
        c = closure_index(catalog, s)
        if c != s.index:
            closure[s.index] = c
    nodes = [{"index": s.index, "label": s.label,
              "closed": s.index not in closure} for s in catalog]
    return {"nodes": nodes, "hasse": sorted(hasse), "closure": sorted(closure.items())}


def graph_to_dot(graph) -> str:
    lines = ["digraph shapes {"]
    for node in graph["nodes"]:
        shape = "box" if node["closed"] else "ellipse"
        lines.append(f'  n{node["index"]} [label="{node["label"]}", shape={shape}];')
    for i, j in graph["hasse"]:
        lines.append(f"  n{i} -> n{j} [style=solid, arrowhead=none, kind=hasse];")
    for i, j in graph["closure"]:
        lines.append(f"  n{i} -> n{j} [style=bold, color=blue, kind=closure];")
    lines.append("}")
    return "\n".join(lines)
