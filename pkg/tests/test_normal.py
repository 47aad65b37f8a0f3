"""Normal lattices, maximal normal subgroups, simplicity, decompositions."""

import pytest

from aslkit.core import (
    Subgroup,
    conjugacy_classes,
    direct_product,
    direct_product_many,
    trivial_subgroup,
)
from aslkit.errors import NotSimpleFactor, TooManyClasses, TrivialGroup
from aslkit.families import alternating_group, cyclic_group, symmetric_group
from aslkit.normal import (
    all_normal_subgroups,
    is_simple,
    is_solvable,
    maximal_normal_subgroups,
    melnikov_subgroup,
    product_normal_decomposition,
    solvable_radical,
)


def test_lattice_s4(s4):
    lat = all_normal_subgroups(s4)
    assert [s.order for s in lat] == [1, 4, 12, 24]


def test_lattice_c6(c6):
    assert [s.order for s in all_normal_subgroups(c6)] == [1, 2, 3, 6]


def test_lattice_simple(a5):
    assert [s.order for s in all_normal_subgroups(a5)] == [1, 60]


def test_lattice_members_are_class_unions(s4, q8):
    for g in (s4, q8):
        classes = conjugacy_classes(g)
        for sub in all_normal_subgroups(g):
            covered = set()
            for cls in classes:
                if cls[0] in sub.member_set:
                    assert set(cls) <= sub.member_set
                    covered |= set(cls)
            assert covered == set(sub.members)


def test_lattice_closed_under_meet_join(s4, q8, c6):
    for g in (s4, q8, c6):
        lat = list(all_normal_subgroups(g))
        sets = {s.member_set for s in lat}
        for a in lat:
            for b in lat:
                assert a.intersect(b).member_set in sets
                assert a.join(b).member_set in sets


def test_class_cap():
    with pytest.raises(TooManyClasses):
        all_normal_subgroups(cyclic_group(30), max_classes=16)


def test_maximal_normals(s4, c6):
    assert [s.order for s in maximal_normal_subgroups(s4)] == [12]
    assert sorted(s.order for s in maximal_normal_subgroups(c6)) == [2, 3]
    assert [s.order for s in maximal_normal_subgroups(alternating_group(5))] \
        == [1]
    with pytest.raises(TrivialGroup):
        maximal_normal_subgroups(cyclic_group(1))


def test_every_maximal_has_simple_quotient(s4, q8, c6):
    from aslkit.core import quotient
    for g in (s4, q8, c6, symmetric_group(5)):
        lat = list(all_normal_subgroups(g))
        maxn = {s.member_set for s in maximal_normal_subgroups(g)}
        for n in lat:
            if n.order == g.order:
                continue
            quot, _ = quotient(g, n)
            simple = quot.order > 1 and is_simple(quot)
            assert (n.member_set in maxn) == simple


def test_is_simple(a5, s4):
    assert is_simple(a5)
    assert not is_simple(cyclic_group(4))
    assert is_simple(cyclic_group(7))
    assert not is_simple(s4)
    with pytest.raises(TrivialGroup):
        is_simple(cyclic_group(1))


def test_melnikov(s4, c6, a5):
    assert melnikov_subgroup(s4).order == 12
    assert melnikov_subgroup(c6).order == 1
    assert melnikov_subgroup(a5).order == 1


def test_solvable_radical(s4, a5):
    assert solvable_radical(s4).order == 24
    assert solvable_radical(a5).order == 1
    prod = direct_product(a5, c6 := cyclic_group(6))
    assert solvable_radical(prod).order == 6
    assert is_solvable(s4)
    assert not is_solvable(a5)


def test_product_decomposition_examples(a5):
    c6 = cyclic_group(6)
    prod = direct_product_many([c6, a5])
    # N = C3 x A5 inside C6 x A5
    members = [i for i in range(prod.order)
               if prod.value(i)[0] in (0, 2, 4)]
    n = Subgroup(prod, members)
    ncap, j = product_normal_decomposition(c6, [a5], n)
    assert ncap.order == 3
    assert j == (0,)

    triv = trivial_subgroup(prod)
    ncap, j = product_normal_decomposition(c6, [a5], triv)
    assert ncap.order == 1 and j == ()


def test_product_decomposition_two_factors(a5):
    c1 = cyclic_group(1)
    other = alternating_group(5)
    prod = direct_product_many([c1, a5, other])
    members = [i for i in range(prod.order) if prod.value(i)[1] == 0]
    n = Subgroup(prod, members)
    ncap, j = product_normal_decomposition(c1, [a5, other], n)
    assert ncap.order == 1
    assert j == (1,)


def test_product_decomposition_rejects_bad_factors(s4):
    c2 = cyclic_group(2)
    prod = direct_product_many([c2, s4])
    with pytest.raises(NotSimpleFactor):
        product_normal_decomposition(c2, [s4], trivial_subgroup(prod))


def test_oracle_lattice_agreement_small(s4, q8, c6, d4, v4):
    from aslkit.oracle import oracle_normal_subgroups
    for g in (s4, q8, c6, d4, v4, symmetric_group(5)):
        main = sorted((s.order, s.members) for s in all_normal_subgroups(g))
        orc = sorted((s.order, s.members) for s in oracle_normal_subgroups(g))
        assert main == orc
