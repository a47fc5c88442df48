"""Involution centralizers as parabolic normalizers.

An involution u negates the roots lying in its (-1)-eigenspace; the parabolic
generated by the reflections in those roots is the pointwise stabilizer of
Fix(u), and the centralizer of u coincides with the normalizer of that
parabolic.  The involution classes of W correspond to the shapes marked with
an asterisk in the decomposition tables: those whose representative's longest
element acts as -1 on the span of its roots.
"""

from __future__ import annotations

from dataclasses import dataclass

from .galois import orthogonal_complement, perp_index, closure_index
from .groups import GroupElement, generate
from .normalizer import normalizer_order, subsystem_longest_element
from .parabolic import (ParabolicSubgroup, ReflectionSubgroup,
                        parabolic_from_roots, shape_catalog, standard_parabolic)


def negated_roots(u: GroupElement):
    rs = u.rs
    return frozenset(i for i in range(rs.nroots) if int(u.img[i]) == rs.neg(i))


def fixed_parabolic(u: GroupElement) -> ParabolicSubgroup:
    """The parabolic whose root system is the set of roots negated by u."""
    if not u.is_involution():
        raise ValueError("element is not an involution")
    rs = u.rs
    return parabolic_from_roots(rs, negated_roots(u))


def degree(u: GroupElement) -> int:
    """Dimension of the (-1)-eigenspace of an involution."""
    rs = u.rs
    neg = negated_roots(u)
    if rs.is_vector:
        return rs.span_rank(neg) if neg else 0
    return rs.span_rank(neg)


@dataclass
class InvolutionRecord:
    element: GroupElement
    degree: int
    shape_index: int
    centralizer_order: int


def involution_class_representatives(rs):
    """One involution per conjugacy class: the longest elements of the marked shapes.

    Every involution of a finite reflection group is the longest element of
    the parabolic it determines, so the classes correspond exactly to the
    shapes whose normalizer is an involution centralizer (the identity
    corresponds to the trivial shape and is skipped).
    """
    catalog = shape_catalog(rs)
    out = []
    for shape in catalog:
        if shape.index == 1 and not shape.roots:
            continue
        P = standard_parabolic(rs, shape.rep_subset)
        w0 = subsystem_longest_element(rs, P.sub)
        if all(int(w0.img[i]) == rs.neg(i) for i in P.pos):
            out.append(InvolutionRecord(w0, degree(w0), shape.index,
                                        normalizer_order(P)))
    return out


def mark_involution_shapes(rs):
    """Indices of shapes whose normalizer is an involution centralizer."""
    catalog = shape_catalog(rs)
    marked = {1}  # the trivial parabolic comes from the identity involution
    for rec in involution_class_representatives(rs):
        marked.add(rec.shape_index)
    return sorted(marked)


def centralizer(W, u: GroupElement):
    return [w for w in W if (w * u).key == (u * w).key]


def centralizer_equals_normalizer(u: GroupElement, W=None) -> dict:
    """Assert C_W(u) = N_W(fixed parabolic of u), by double inclusion.

    Requires the full group (enumerated here when not supplied); intended for
    the brute-force tiers.
    """
    rs = u.rs
    if W is None:
        W = generate(rs.simple_reflections())
    P = fixed_parabolic(u)
    roots = P.roots
    cent = centralizer(W, u)
    report = {"ok": True, "witness": None, "centralizer_order": len(cent)}
    for w in cent:
        if any(int(w.img[i]) not in roots for i in P.pos):
            report.update(ok=False, witness=("centralizer outside normalizer",
                                             w.canonical()))
            return report
    norm = [w for w in W if all(int(w.img[i]) in roots for i in P.pos)]
    cent_keys = {w.key for w in cent}
    for w in norm:
        if w.key not in cent_keys:
            report.update(ok=False, witness=("normalizer outside centralizer",
                                             w.canonical()))
            return report
    return report


def has_central_minus_one(rs) -> bool:
    """Does -1 lie in W (equivalently, does w0 negate every root)?"""
    full = ReflectionSubgroup(rs, frozenset(range(rs.nroots)))
    w0 = subsystem_longest_element(rs, full)
    return all(int(w0.img[i]) == rs.neg(i) for i in range(rs.npos))


def section8_checks(rs) -> dict:
    """The observation suite: per-bullet pass/fail with witnesses."""
    catalog = shape_catalog(rs)
    marked = set(mark_involution_shapes(rs))
    closed = {s.index for s in catalog if closure_index(catalog, s) == s.index}
    closure_of = {s.index: closure_index(catalog, s) for s in catalog}
    minus_one = has_central_minus_one(rs)
    report = {"group": str(rs.label), "minus_one_central": minus_one, "checks": {}}

    def record(name, ok, witness=None):
        report["checks"][name] = {"ok": ok, "witness": witness}

    # at most one involution centralizer per closure group (all groups)
    per_group = {}
    bad = None
    for idx in marked:
        g = closure_of[idx]
        per_group.setdefault(g, []).append(idx)
    for g, members in per_group.items():
        if len(members) > 1:
            bad = (g, members)
    record("at_most_one_per_closure_group", bad is None, bad)

    if minus_one:
        # involution centralizers are exactly the orthogonally closed shapes
        # in type B; in general (with -1 central) they are closed, and the
        # complement of a marked shape is marked
        not_closed = sorted(marked - closed)
        record("centralizers_closed", not_closed == [], not_closed or None)
        perp_of = {s.index: perp_index(catalog, s) for s in catalog}
        bad = [i for i in marked if perp_of[i] not in marked]
        record("complement_marked", bad == [], bad or None)
        if rs.label.family == "B":
            extra = sorted(closed - marked)
            record("closed_iff_centralizer", extra == [], extra or None)
        # w0 central and P closed implies the closure of PQ is the whole group
        bad = None
        for s in catalog:
            if s.index not in closed:
                continue
            P = standard_parabolic(rs, s.rep_subset)
            Q = orthogonal_complement(P.sub)
            from .parabolic import pointwise_stabilizer, fixed_space
            pq = ReflectionSubgroup(rs, P.roots | Q.roots)
            cl = pointwise_stabilizer(rs, fixed_space(pq))
            if len(cl.roots) != rs.nroots:
                bad = s.index
                break
        record("closed_implies_pq_closure_full", bad is None, bad)

        # fixed parabolic of -u is the orthogonal complement of that of u
        import numpy as np
        negation = GroupElement(
            rs, np.array([rs.neg(i) for i in range(rs.nroots)], dtype=np.int16))
        bad = None
        for rec in involution_class_representatives(rs):
            u = rec.element
            minus_u = u * negation
            P_u = fixed_parabolic(u)
            P_mu = fixed_parabolic(minus_u)
            if P_mu.roots != orthogonal_complement(P_u.sub).roots:
                bad = rec.shape_index
                break
        record("minus_u_complement", bad is None, bad)

    # longest element of a marked P is conjugate to that of its closure
    bad = None
    for idx in sorted(marked):
        shape = catalog[idx]
        cl = catalog[closure_of[idx]]
        if not shape.roots:
            if cl.roots:
                bad = idx
                break
            continue
        P = standard_parabolic(rs, shape.rep_subset)
        Pc = standard_parabolic(rs, cl.rep_subset)
        u = subsystem_longest_element(rs, P.sub)
        v = subsystem_longest_element(rs, Pc.sub)
        # involutions are conjugate iff their fixed parabolics are
        iu = catalog.class_of_roots(negated_roots(u))
        iv = catalog.class_of_roots(negated_roots(v))
        if iu != iv:
            bad = (idx, iu, iv)
            break
    record("longest_element_conjugate_to_closure", bad is None, bad)

    report["ok"] = all(c["ok"] for c in report["checks"].values())
    return report
