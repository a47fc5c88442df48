import itertools

from coxnorm.galois import (closure_index, orthogonal_closure,
                            orthogonal_complement, parabolic_concepts,
                            perp_index, shape_closure_graph)
from coxnorm.parabolic import (ReflectionSubgroup, parabolic_from_roots,
                               shape_catalog, standard_parabolic)
from coxnorm.rootsys import build_root_system


def concept_labels(name):
    rs = build_root_system(name)
    cat = shape_catalog(rs)
    return {(cat[i].label, cat[j].label) for i, j in parabolic_concepts(rs)}


def test_perp_of_trivial_is_w():
    rs = build_root_system("B3")
    U = ReflectionSubgroup(rs, frozenset())
    assert len(orthogonal_complement(U).roots) == rs.nroots


def test_a7_perp_of_a1a1_is_a3():
    rs = build_root_system("A7")
    cat = shape_catalog(rs)
    shape = cat.by_selector("[221111]")
    assert perp_index(cat, shape) == 7
    assert cat[7].type_label == "A3"


def test_e6_a5_a1_concept():
    rs = build_root_system("E6")
    cat = shape_catalog(rs)
    a5 = next(s for s in cat if s.label == "A5")
    a1 = next(s for s in cat if s.label == "A1")
    assert perp_index(cat, a5) == a1.index
    assert perp_index(cat, a1) == a5.index


def test_closure_of_a1cubed_in_a7_is_a5():
    rs = build_root_system("A7")
    cat = shape_catalog(rs)
    shape = cat.by_selector("[22211]")
    assert closure_index(cat, shape) == 17
    assert cat[17].type_label == "A5"


def test_triple_perp_law():
    rs = build_root_system("B3")
    for mask in range(1 << rs.n):
        subset = tuple(i for i in range(rs.n) if mask >> i & 1)
        U = ReflectionSubgroup.standard(rs, subset)
        p1 = orthogonal_complement(U)
        p3 = orthogonal_complement(orthogonal_closure(U))
        assert p1.roots == p3.roots


def test_e6_concepts():
    assert concept_labels("E6") == {("∅", "E6"), ("A1", "A5"),
                                    ("A1^2", "A3"), ("A2", "A2^2")}


def test_h4_concepts():
    assert concept_labels("H4") == {("∅", "H4"), ("A1", "H3"),
                                    ("A1^2", "A1^2"), ("A2", "A2"),
                                    ("H2", "H2")}


def test_b5_concepts_family_rule():
    rs = build_root_system("B5")
    cat = shape_catalog(rs)
    got = {frozenset((i, j)) for i, j in parabolic_concepts(rs)}
    expected = set()
    by_key = {(s.block, s.partition): s.index for s in cat}
    for k in range(0, 3):
        for m in range(0, 6 - 2 * k):
            l = 5 - m - 2 * k
            if l < 0:
                continue
            left = by_key[(("B", m), (2,) * k + (1,) * l)]
            right = by_key[(("B", l), (2,) * k + (1,) * m)]
            expected.add(frozenset((left, right)))
    assert got == expected


def test_i2_concept_parities():
    # odd m: only the top pair; m = 0 mod 4: two self-paired A1 classes;
    # m = 2 mod 4: the two A1 classes are each other's complements
    assert len(parabolic_concepts(build_root_system("I2(7)"))) == 1
    c8 = parabolic_concepts(build_root_system("I2(8)"))
    assert (2, 2) in c8 and (3, 3) in c8 and len(c8) == 3
    c10 = parabolic_concepts(build_root_system("I2(10)"))
    assert (2, 3) in c10 and len(c10) == 2


def test_e6_closure_graph_matches_published_diagram():
    rs = build_root_system("E6")
    graph = shape_closure_graph(rs)
    assert len(graph["nodes"]) == 17
    boxed = {n["index"] for n in graph["nodes"] if n["closed"]}
    labels = {n["index"]: n["label"] for n in graph["nodes"]}
    assert {labels[i] for i in boxed} == {"∅", "A1", "A1^2", "A2", "A3",
                                          "A2^2", "A5", "E6"}
    hasse = set(map(tuple, graph["hasse"]))
    expected_hasse = {(2, 1), (3, 2), (4, 2), (5, 3), (6, 3), (6, 4), (7, 3),
                      (7, 4), (8, 5), (8, 6), (9, 6), (10, 5), (10, 6),
                      (10, 7), (11, 6), (11, 7), (12, 5), (12, 7), (13, 8),
                      (13, 9), (14, 8), (14, 10), (14, 11), (15, 9), (15, 10),
                      (15, 11), (16, 8), (16, 10), (16, 11), (16, 12),
                      (17, 13), (17, 14), (17, 15), (17, 16)}
    assert hasse == expected_hasse
    closure = dict(map(tuple, graph["closure"]))
    assert closure == {5: 15, 6: 9, 8: 17, 10: 15, 11: 15, 12: 17, 13: 17,
                       14: 17, 16: 17}
    # closure edges point upward in the poset
    reach = {i: {i} for i in labels}
    changed = True
    while changed:
        changed = False
        for a, b in expected_hasse:
            if not reach[b] <= reach[a]:
                reach[a] |= reach[b]
                changed = True
    for src, dst in closure.items():
        assert src in reach[dst]


def test_rank_one_graph():
    graph = shape_closure_graph(build_root_system("A1"))
    assert len(graph["nodes"]) == 2
    assert graph["hasse"] == [(2, 1)]
    assert all(n["closed"] for n in graph["nodes"])
    assert graph["closure"] == []


def test_concept_meet_is_concept():
    # the componentwise meet (P1 n P2, closure of <Q1 u Q2>) is again a concept
    for name in ["A3", "B3", "B4", "D4", "H3", "F4"]:
        rs = build_root_system(name)
        cat = shape_catalog(rs)
        concepts = parabolic_concepts(rs)
        reps = {i: standard_parabolic(rs, cat[i].rep_subset) for i in
                {k for pair in concepts for k in pair}}
        for (i1, j1), (i2, j2) in itertools.combinations(concepts, 2):
            left = parabolic_from_roots(rs, reps[i1].roots & reps[i2].roots)
            assert orthogonal_closure(left.sub).roots == left.roots
