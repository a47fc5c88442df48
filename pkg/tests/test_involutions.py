from coxnorm.groups import generate, identity
from coxnorm.involutions import (centralizer_equals_normalizer, degree,
                                 fixed_parabolic,
                                 involution_class_representatives,
                                 mark_involution_shapes, section8_checks)
from coxnorm.normalizer import subsystem_longest_element
from coxnorm.parabolic import ReflectionSubgroup
from coxnorm.rootsys import build_root_system

import pytest


def test_fixed_parabolic_basics():
    rs = build_root_system("B2")
    assert fixed_parabolic(identity(rs)).roots == frozenset()
    w0 = subsystem_longest_element(rs, ReflectionSubgroup(rs, frozenset(range(rs.nroots))))
    assert fixed_parabolic(w0).roots == frozenset(range(rs.nroots))
    s = rs.reflection(0)
    assert fixed_parabolic(s).roots == frozenset({0, rs.neg(0)})
    with pytest.raises(ValueError):
        fixed_parabolic(rs.reflection(0) * rs.reflection(1))


def test_degree_plus_fixed_dim_is_rank():
    rs = build_root_system("B3")
    W = generate(rs.simple_reflections())
    for w in W:
        if w.is_involution() and not w.is_identity():
            P = fixed_parabolic(w)
            assert degree(w) + P.witness.dim == rs.n


def test_centralizer_equals_normalizer_exhaustive():
    for name in ["A3", "F4"]:
        rs = build_root_system(name)
        W = generate(rs.simple_reflections())
        for w in W:
            if w.is_involution() and not w.is_identity():
                rep = centralizer_equals_normalizer(w, W)
                assert rep["ok"], (name, rep)


def test_marked_shapes():
    assert mark_involution_shapes(build_root_system("A7")) == [1, 2, 3, 5, 8]
    b5 = mark_involution_shapes(build_root_system("B5"))
    assert len(b5) == 12 and 19 in b5  # includes the whole group
    assert mark_involution_shapes(build_root_system("A1")) == [1, 2]


def test_involution_class_count_vs_brute():
    for name in ["A3", "B3", "D4", "H3"]:
        rs = build_root_system(name)
        W = generate(rs.simple_reflections())
        brute = sum(1 for w in W if w.is_involution() and not w.is_identity())
        recs = involution_class_representatives(rs)
        total = 0
        from coxnorm.normalizer import normalizer_order
        for rec in recs:
            total += rs.group_order // rec.centralizer_order
        assert total == brute


def test_section8_minus_one_groups():
    for name in ["B4", "D4", "F4", "H3"]:
        rep = section8_checks(build_root_system(name))
        assert rep["minus_one_central"]
        assert rep["ok"], rep


def test_section8_e6_only_weak_bullets():
    rep = section8_checks(build_root_system("E6"))
    assert not rep["minus_one_central"]
    assert rep["checks"]["at_most_one_per_closure_group"]["ok"]
    assert rep["ok"]


def test_b6_closed_iff_centralizer():
    rep = section8_checks(build_root_system("B6"))
    assert rep["checks"]["closed_iff_centralizer"]["ok"]
    assert rep["ok"]
