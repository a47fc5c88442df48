"""Verification suites: executable checks behind `verify` and the test suite.

Each function returns a report dict with an "ok" flag and per-check details;
they are exhaustive over the stated objects, never sampled.
"""

from __future__ import annotations

import itertools

from .galois import orthogonal_closure, orthogonal_complement
from .groups import generate, relative_length
from .involutions import section8_checks
from .normalizer import (decompose, goursat_sections, normalizer,
                         verify_theorem13)
from .oracle import (brute_normalizer, brute_orthogonal_complement,
                     diff_fixture, load_fixture)
from .parabolic import (ReflectionSubgroup, shape_catalog,
                        standard_parabolic)


def _standard_subsets(rs):
    n = rs.n
    for mask in range(1 << n):
        yield tuple(i for i in range(n) if mask >> i & 1)


def verify_galois(rs) -> dict:
    """Galois laws for the orthogonality connection, over standard parabolics."""
    report = {"group": str(rs.label), "checks": {}}
    subs = {s: ReflectionSubgroup.standard(rs, s) for s in _standard_subsets(rs)}
    perp = {s: orthogonal_complement(u) for s, u in subs.items()}

    bad = None
    for s, u in subs.items():
        cl = orthogonal_closure(u)
        if not u.roots <= cl.roots:
            bad = s
            break
    report["checks"]["extensive"] = {"ok": bad is None, "witness": bad}

    bad = None
    for s1, s2 in itertools.combinations(subs, 2):
        small, big = (s1, s2) if set(s1) <= set(s2) else (s2, s1)
        if not set(small) <= set(big):
            continue
        if not perp[big].roots <= perp[small].roots:
            bad = (small, big)
            break
    report["checks"]["antitone"] = {"ok": bad is None, "witness": bad}

    bad = None
    for s, u in subs.items():
        p3 = orthogonal_complement(orthogonal_closure(u))
        if p3.roots != perp[s].roots:
            bad = s
            break
    report["checks"]["triple_perp"] = {"ok": bad is None, "witness": bad}

    bad = None
    for s, u in subs.items():
        c1 = orthogonal_closure(u)
        c2 = orthogonal_closure(c1)
        if c1.roots != c2.roots:
            bad = s
            break
    report["checks"]["closure_idempotent"] = {"ok": bad is None, "witness": bad}

    if rs.group_order <= 10 ** 6 and rs.is_vector:
        bad = None
        for s, u in subs.items():
            if brute_orthogonal_complement(u).roots != perp[s].roots:
                bad = s
                break
        report["checks"]["commutation_route_agrees"] = {"ok": bad is None, "witness": bad}

    report["ok"] = all(c["ok"] for c in report["checks"].values())
    return report


def verify_howlett(rs) -> dict:
    """Howlett complements for every standard parabolic: N = P x| H exactly."""
    report = {"group": str(rs.label), "checks": {}}
    W = generate(rs.simple_reflections())
    bad = None
    for subset in _standard_subsets(rs):
        P = standard_parabolic(rs, subset)
        N = [w for w in W if all(int(w.img[i]) in P.roots for i in P.pos)]
        H = [w for w in N if relative_length(w, P.pos) == 0]
        if P.pos:
            P_group = list(generate([rs.reflection(i) for i in P.sub.simples]))
        else:
            from .groups import identity
            P_group = [identity(rs)]
        P_keys = {w.key for w in P_group}
        H_keys = {w.key for w in H}
        inter = P_keys & H_keys
        prod = {(p * h).key for p in P_group for h in H}
        ok = (len(inter) == 1
              and len(prod) == len(N)
              and len(P_keys) * len(H_keys) == len(N))
        if ok:
            pos = P.pos
            npos = rs.npos
            for h in H:
                if any(int(h.img[i]) >= npos for i in pos):
                    ok = False
                    break
            if ok:
                for h in H:
                    hinv = h.inverse()
                    for p in P_group:
                        if relative_length((hinv * p) * h, pos) != relative_length(p, pos):
                            ok = False
                            break
                    if not ok:
                        break
        if not ok:
            bad = subset
            break
    report["checks"]["complement"] = {"ok": bad is None, "witness": bad}
    report["ok"] = bad is None
    return report


def verify_goursat(rs) -> dict:
    """Goursat sections of N inside O(X_perp) x O(X), for every shape."""
    report = {"group": str(rs.label), "checks": {}}
    catalog = shape_catalog(rs)
    bad_sections = None
    bad_order = None
    bad_normal = None
    for shape in catalog:
        dec = decompose(rs, shape)
        if dec.n_order != dec.p_order * dec.q_order * len(dec.A) * len(dec.B) * len(dec.C):
            bad_order = shape.label
            break
        rep = verify_theorem13(dec)
        if not rep["ok"]:
            bad_normal = (shape.label, rep["witness"])
            break
        if not rs.is_vector:
            continue
        N = normalizer(dec.P)
        xperp, mid, yperp = dec.spaces
        X = dec.P.witness
        sec = goursat_sections(N, xperp, X, complement=dec.D)
        g2 = {w.key for w in sec.kernels[0]}
        h2 = {w.key for w in sec.kernels[1]}
        p_keys = {w.key for w in generate([rs.reflection(i) for i in dec.P.sub.simples])} \
            if dec.P.pos else {w.key for w in N if w.is_identity()}
        q_keys = {w.key for w in generate([rs.reflection(i) for i in dec.Q.sub.simples])} \
            if dec.Q.pos else {w.key for w in N if w.is_identity()}
        theta = {}
        ok = g2 == p_keys and h2 == q_keys
        if ok and sec.complements:
            for m1, m2 in zip(*sec.complements):
                if m1 in theta and theta[m1] != m2:
                    ok = False
                    break
                theta[m1] = m2
            if ok and len(theta) != len(set(theta.values())):
                ok = False
            if ok and len(theta) != len(dec.D):
                ok = False
        if not ok:
            bad_sections = shape.label
            break
    report["checks"]["order_product"] = {"ok": bad_order is None, "witness": bad_order}
    report["checks"]["pqab_normal_index2"] = {"ok": bad_normal is None, "witness": bad_normal}
    report["checks"]["sections"] = {"ok": bad_sections is None, "witness": bad_sections}
    report["ok"] = all(c["ok"] for c in report["checks"].values())
    return report


def verify_section8(rs) -> dict:
    """Observation suite plus the closure-of-PQ-closure law."""
    report = section8_checks(rs)
    catalog = shape_catalog(rs)
    bad = None
    for shape in catalog:
        P = standard_parabolic(rs, shape.rep_subset)
        Q = orthogonal_complement(P.sub)
        pq = ReflectionSubgroup(rs, P.roots | Q.roots)
        from .parabolic import parabolic_closure
        closure = parabolic_closure(pq)
        final = orthogonal_closure(closure.sub)
        if len(final.roots) != rs.nroots:
            bad = shape.label
            break
    report["checks"]["pq_closure_orthogonal_closure_is_w"] = {
        "ok": bad is None, "witness": bad}
    report["ok"] = all(c["ok"] for c in report["checks"].values())
    return report


def verify_fixtures(rs, jobs=1) -> dict:
    """Golden table diff: zero mismatched cells required."""
    from .normalizer import compute_table
    fixture = load_fixture(str(rs.label))
    rows = compute_table(rs, jobs=jobs)
    catalog = shape_catalog(rs)
    result = diff_fixture(fixture, rows, catalog)
    return {"group": str(rs.label), "ok": result["ok"],
            "mismatches": result["mismatches"]}


def verify_oracle(rs) -> dict:
    """Fast paths against brute force: normalizer and orthogonal complement."""
    report = {"group": str(rs.label), "checks": {}}
    W = generate(rs.simple_reflections())
    catalog = shape_catalog(rs)
    bad = None
    for shape in catalog:
        P = standard_parabolic(rs, shape.rep_subset)
        brute = brute_normalizer(P, W)
        from .normalizer import normalizer_order
        if len(brute) != normalizer_order(P):
            bad = shape.label
            break
        N = normalizer(P)
        if {w.key for w in brute} != {w.key for w in N}:
            bad = shape.label
            break
    report["checks"]["normalizer"] = {"ok": bad is None, "witness": bad}
    bad = None
    if rs.is_vector:
        for subset in _standard_subsets(rs):
            U = ReflectionSubgroup.standard(rs, subset)
            if brute_orthogonal_complement(U).roots != orthogonal_complement(U).roots:
                bad = subset
                break
    report["checks"]["orthogonal_complement"] = {"ok": bad is None, "witness": bad}
    report["ok"] = all(c["ok"] for c in report["checks"].values())
    return report


SUITES = {
    "galois": verify_galois,
    "howlett": verify_howlett,
    "goursat": verify_goursat,
    "section8": verify_section8,
    "fixtures": verify_fixtures,
    "oracle": verify_oracle,
}
