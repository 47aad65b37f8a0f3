"""Generalized derived series, length, factor structure, certificates."""

import math

from aslkit.core import direct_product, full_subgroup, quotient
from aslkit.families import (
    alternating_group,
    cyclic_group,
    symmetric_group,
)
from aslkit.matgroups import sl_group
from aslkit.series import (
    abelian_invariants,
    abelian_simple_length,
    d0_subgroup,
    derived_series,
    factor_structure,
    generalized_derived_series,
    generalized_derived_subgroup,
    subnormal_certificate,
    verify_certificate,
)


def test_d0_examples(s4, a5):
    assert d0_subgroup(s4).order == 24
    assert d0_subgroup(cyclic_group(8)).order == 8
    prod = direct_product(a5, alternating_group(5))
    assert d0_subgroup(prod).order == 1


def test_d_examples(s3, s4, a5):
    assert generalized_derived_subgroup(s3).order == 3
    assert generalized_derived_subgroup(a5).order == 1
    assert generalized_derived_subgroup(s4).order == 12


def test_series_s4(s4):
    rep = generalized_derived_series(s4)
    assert rep.orders() == (24, 12, 4, 1)
    assert rep.length == 3
    assert rep.terminates
    for term in rep.terms:
        assert term.verify_normal()


def test_series_monotone_and_terminates(s4, q8, d4):
    for g in (s4, q8, d4, symmetric_group(5), cyclic_group(12)):
        rep = generalized_derived_series(g)
        orders = rep.orders()
        assert all(a > b for a, b in zip(orders, orders[1:]))
        assert orders[-1] == 1


def test_series_trivial():
    rep = generalized_derived_series(cyclic_group(1))
    assert rep.length == 0
    assert len(rep.terms) == 1


def test_series_d4(d4):
    rep = generalized_derived_series(d4)
    assert rep.orders() == (8, 2, 1)
    assert rep.length == 2


def test_spot_lengths(s3, s4, q8, d4, a5):
    assert abelian_simple_length(s3) == 2
    assert abelian_simple_length(s4) == 3
    assert abelian_simple_length(q8) == 2
    assert abelian_simple_length(d4) == 2
    assert abelian_simple_length(a5) == 1
    assert abelian_simple_length(cyclic_group(1)) == 0
    assert abelian_simple_length(symmetric_group(5)) == 2
    assert abelian_simple_length(sl_group(2, 3)) == 3


def test_sl23_series():
    rep = generalized_derived_series(sl_group(2, 3))
    assert rep.orders() == (24, 8, 2, 1)


def test_log_bound_sample(s4, q8):
    for g in (s4, q8, cyclic_group(17), alternating_group(6)):
        assert abelian_simple_length(g) <= math.log2(g.order)


def test_derived_series_s4_and_a5(s4, a5):
    rep = derived_series(s4)
    assert rep.orders() == (24, 12, 4, 1)
    assert rep.terminates
    rep5 = derived_series(a5)
    assert not rep5.terminates
    assert rep5.orders() == (60,)


def test_derived_abelian():
    rep = derived_series(cyclic_group(9))
    assert rep.orders() == (9, 1)
    assert rep.length == 1


def test_abelian_invariants(v4, c6):
    assert abelian_invariants(full_subgroup(v4)) == (2, 2)
    assert abelian_invariants(full_subgroup(c6)) == (6,)
    c2c8 = direct_product(cyclic_group(2), cyclic_group(8))
    assert abelian_invariants(full_subgroup(c2c8)) == (2, 8)
    c6c4 = direct_product(cyclic_group(6), cyclic_group(4))
    assert abelian_invariants(full_subgroup(c6c4)) == (2, 12)


def test_factor_structure(s3, a5):
    desc = factor_structure(s3)
    assert desc.abelian_invariants == (2,)
    assert desc.simple_orders == ()
    prod = direct_product(a5, cyclic_group(6))
    desc2 = factor_structure(prod)
    assert desc2.abelian_invariants == (6,)
    assert desc2.simple_orders == (60,)
    ab = cyclic_group(12)
    desc3 = factor_structure(ab)
    assert desc3.abelian_invariants == (12,)
    assert desc3.simple_orders == ()


def test_certificate_s4(s4):
    rep = subnormal_certificate(s4)
    assert [f.kind for f in rep.factors] == ["abelian"] * 3
    assert [f.abelian_invariants for f in rep.factors] == [(2,), (3,), (2, 2)]
    assert verify_certificate(rep)


def test_certificate_a5(a5):
    rep = subnormal_certificate(a5)
    assert len(rep.factors) == 1
    assert rep.factors[0].kind == "semisimple"
    assert rep.factors[0].simple_orders == (60,)
    assert verify_certificate(rep)


def test_certificate_mixed(a5):
    prod = direct_product(a5, cyclic_group(2))
    rep = subnormal_certificate(prod)
    assert [f.kind for f in rep.factors] == ["semisimple", "abelian"]
    assert rep.factors[0].simple_orders == (60,)
    assert rep.factors[1].abelian_invariants == (2,)
    assert verify_certificate(rep)


def test_quotient_image_law(s4):
    gds = generalized_derived_series(s4)
    from aslkit.normal import all_normal_subgroups
    for n in all_normal_subgroups(s4):
        q, pi = quotient(s4, n)
        qser = generalized_derived_series(q)
        for i, qterm in enumerate(qser.terms):
            image = {pi.mapping[x] for x in gds.terms[i].members} \
                if i < len(gds.terms) else {0}
            assert image == qterm.member_set


def test_extension_bound_on_sample(s4, q8, d4):
    from aslkit.normal import all_normal_subgroups
    for g in (s4, q8, d4):
        lg = abelian_simple_length(g)
        for n in all_normal_subgroups(g):
            q, _ = quotient(g, n)
            assert lg <= abelian_simple_length(n.as_group()) + \
                abelian_simple_length(q)


def test_simple_alternating_lengths():
    assert abelian_simple_length(alternating_group(6)) == 1
    assert abelian_simple_length(alternating_group(7)) == 1


def test_fiber_product_term_containment():
    """Series terms of a fiber product project into the factors' terms."""
    from aslkit.core import fiber_product
    from aslkit.verify import fiber_triples
    for name, g, h, alpha, beta in fiber_triples()[:4]:
        fp = fiber_product(alpha, beta)
        fser = generalized_derived_series(fp)
        gser = generalized_derived_series(g)
        hser = generalized_derived_series(h)
        for i, term in enumerate(fser.terms):
            gterm = gser.terms[min(i, len(gser.terms) - 1)]
            hterm = hser.terms[min(i, len(hser.terms) - 1)]
            for idx in term.members:
                gi, hi = fp.value(idx)
                assert gi in gterm.member_set
                assert hi in hterm.member_set
