"""Matrix groups over finite fields and residue rings; filtrations."""

import pytest

from aslkit.core import Subgroup, full_subgroup, is_isomorphic
from aslkit.errors import NotInvertible, SearchFailed
from aslkit.families import alternating_group, symmetric_group, cyclic_group
from aslkit.matgroups import (
    LPFiltration,
    MatrixGroupSpec,
    PrimePowerField,
    ResidueRing,
    corollary_decomposition,
    gl_group,
    glz_group,
    is_l_group,
    mat_inv,
    mat_mul,
    matrix_group,
    residue_kernel,
    search_lp,
    sl_group,
    unitriangular_group,
    validate_lp,
)
def test_field_arithmetic_f4():
    f4 = PrimePowerField(4)
    # nonzero elements form a cyclic group of order 3
    assert sorted(f4.mul(2, b) for b in range(1, 4)) == [1, 2, 3]
    assert f4.mul(f4.mul(2, 2), 2) == 1
    assert f4.inv(2) == f4.mul(2, 2)
    assert f4.add(2, 2) == 0  # characteristic 2


def test_field_arithmetic_f9():
    f9 = PrimePowerField(9)
    gen = f9.multiplicative_generator()
    x, n = gen, 1
    while x != 1:
        x = f9.mul(x, gen)
        n += 1
    assert n == 8


def test_residue_ring():
    z9 = ResidueRing(9)
    assert z9.inv(2) == 5
    assert not z9.is_unit(3)
    with pytest.raises(NotInvertible):
        z9.inv(6)


def test_mat_inv_over_local_ring():
    z4 = ResidueRing(4)
    m = ((1, 2), (0, 1))
    inv = mat_inv(z4, m)
    assert mat_mul(z4, m, inv) == ((1, 0), (0, 1))
    with pytest.raises(NotInvertible):
        mat_inv(z4, ((2, 0), (0, 1)))


def test_matrix_group_orders():
    assert gl_group(2, 2).order == 6
    assert gl_group(2, 3).order == 48
    assert sl_group(2, 3).order == 24
    assert sl_group(2, 4).order == 60
    assert sl_group(2, 5).order == 120
    assert unitriangular_group(3, 2).order == 8
    assert unitriangular_group(3, 3).order == 27


def test_matrix_group_rejects_singular():
    f2 = PrimePowerField(2)
    with pytest.raises(NotInvertible):
        matrix_group(MatrixGroupSpec(2, f2, (((1, 1), (1, 1)),)))


def test_matrix_labels_roundtrip():
    g = gl_group(2, 2)
    assert g.labels[0] == "[[1, 0], [0, 1]]"


def test_gl22_is_s3():
    assert is_isomorphic(gl_group(2, 2), symmetric_group(3))


def test_sl24_is_a5():
    assert is_isomorphic(sl_group(2, 4), alternating_group(5))


def test_glz_orders():
    assert glz_group(2, 2, 2).order == 96
    assert glz_group(2, 3, 1).order == 48


def test_residue_kernel():
    ker = residue_kernel(2, 2, 2)
    assert ker.order == 16
    assert is_l_group(ker.as_group(), 2)
    ker3 = residue_kernel(2, 3, 2)
    assert ker3.order == 81
    assert is_l_group(ker3.as_group(), 3)
    assert residue_kernel(2, 5, 1).order == 1


def test_is_l_group(d4, s3):
    assert is_l_group(d4, 2)
    assert not is_l_group(s3, 3)
    assert is_l_group(cyclic_group(1), 7)


def test_validate_lp_examples():
    lam = sl_group(2, 4)
    filt = LPFiltration(full_subgroup(lam),
                        Subgroup(lam, [0], normal=True),
                        Subgroup(lam, [0], normal=True))
    rep = validate_lp(lam, 2, 1, filt)
    assert rep.ok

    triv = cyclic_group(1)
    t = Subgroup(triv, [0], normal=True)
    assert validate_lp(triv, 2, 1, LPFiltration(t, t, t)).ok

    s3mat = gl_group(2, 2)
    from aslkit.normal import all_normal_subgroups
    c3 = next(s for s in all_normal_subgroups(s3mat) if s.order == 3)
    one = next(s for s in all_normal_subgroups(s3mat) if s.order == 1)
    rep2 = validate_lp(s3mat, 2, 2, LPFiltration(c3, c3, one))
    assert rep2.ok


def test_validate_lp_rejects():
    lam = sl_group(2, 3)
    full = full_subgroup(lam)
    one = Subgroup(lam, [0], normal=True)
    # lambda2 = full group is not abelian over lambda3 = 1
    rep = validate_lp(lam, 3, 2, LPFiltration(full, full, one))
    assert not rep.ok
    assert not rep.conditions["abelian_layer"]


def test_search_lp_examples():
    assert search_lp(gl_group(2, 2), 2, 2).orders() == (3, 3, 1)
    assert search_lp(sl_group(2, 4), 2, 1).orders() == (60, 1, 1)
    c5 = cyclic_group(5)
    assert search_lp(c5, 2, 1).orders() == (5, 5, 1)
    assert search_lp(sl_group(2, 3), 3, 2).orders() == (24, 2, 1)


def test_search_lp_failure():
    # S3 with J = 1 and ell = 5: lambda1 must be everything, but S3/anything
    # fails and the bottom layers cannot absorb C3
    assert search_lp(symmetric_group(3), 5, 1) is None


def test_corollary_decomposition_cases():
    amb = glz_group(2, 2, 1)
    n, length = corollary_decomposition(full_subgroup(amb), 2, 2)
    assert n.order == 1 and length == 2

    trivial = Subgroup(amb, [0])
    n, length = corollary_decomposition(trivial, 2, 1)
    assert n.order == 1 and length == 0

    amb3 = glz_group(2, 3, 1)
    det1 = [i for i in range(amb3.order)
            if (amb3.value(i)[0][0] * amb3.value(i)[1][1]
                - amb3.value(i)[0][1] * amb3.value(i)[1][0]) % 3 == 1]
    sl = Subgroup(amb3, det1)
    n, length = corollary_decomposition(sl, 3, 2)
    assert n.order == 1 and length == 3


def test_corollary_uses_residue_kernel():
    amb = glz_group(2, 2, 2)
    n, length = corollary_decomposition(full_subgroup(amb), 2, 6)
    assert n.order == 16  # the full residue kernel is absorbed into N
    assert is_l_group(n.as_group(), 2)
    assert length == 2


def test_corollary_search_failed():
    amb3 = glz_group(2, 3, 1)
    with pytest.raises(SearchFailed):
        corollary_decomposition(full_subgroup(amb3), 3, 1)


def test_corollary_requires_glz_parent():
    from aslkit.errors import UnknownConstructor
    s3 = symmetric_group(3)
    with pytest.raises(UnknownConstructor):
        corollary_decomposition(full_subgroup(s3), 2, 2)
