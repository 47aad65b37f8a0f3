"""Cross-check the induced-group encoding against a from-scratch model.

The reference model enumerates ALL functions f: G -> A, keeps the
equivariant ones (f(s*t) = f(s)^t for t in G0), and multiplies pointwise on
the whole of G. The packaged construction stores f only on coset
representatives; the two must agree element-for-element, including the
translation action f^s(t) = f(s*t).
"""

import itertools

from aslkit.core import GroupAction, full_subgroup, subgroup_generated
from aslkit.families import cyclic_group, symmetric_group
from aslkit.wreath import induced_group, left_coset_reps


def _model_functions(A, G, G0, act_parent):
    """All equivariant functions as full tuples over G, plus helpers."""
    g0_members = set(G0.members)
    functions = []
    for candidate in itertools.product(range(A.order), repeat=G.order):
        ok = True
        for s in range(G.order):
            for t in G0.members:
                if candidate[G.mul(s, t)] != act_parent(candidate[s], t):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            functions.append(candidate)
    return functions


def _check_instance(A, G, G0, act=None):
    G0g = G0.as_group()
    if act is None:
        def act_parent(a, t_parent):
            return a
        wrapped = None
    else:
        pos = {p: i for i, p in enumerate(G0.members)}

        def act_parent(a, t_parent):
            return act.apply(a, pos[t_parent])
        wrapped = act
    ind, g_action = induced_group(A, G, G0, wrapped)
    reps, _ = left_coset_reps(G, G0)
    model = _model_functions(A, G, G0, act_parent)
    assert len(model) == ind.order

    def restrict(full):
        return tuple(full[r] for r in reps)

    by_restriction = {restrict(f): f for f in model}
    assert len(by_restriction) == len(model)  # representatives determine f

    # pointwise product of full functions matches the packaged product
    for fa in model[: min(len(model), 12)]:
        for fb in model[: min(len(model), 12)]:
            full_prod = tuple(A.mul(x, y) for x, y in zip(fa, fb))
            ia, ib = ind.index_of(restrict(fa)), ind.index_of(restrict(fb))
            assert ind.value(ind.mul(ia, ib)) == restrict(full_prod)

    # translation action: f^s(t) = f(s*t) on the full model
    for fa in model[: min(len(model), 12)]:
        ia = ind.index_of(restrict(fa))
        for s in range(G.order):
            moved = tuple(fa[G.mul(s, t)] for t in range(G.order))
            assert ind.value(g_action.apply(ia, s)) == restrict(moved)


def test_induced_matches_model_trivial_action():
    s3 = symmetric_group(3)
    g0 = subgroup_generated(s3, [s3.index_of((1, 0, 2))])
    _check_instance(cyclic_group(2), s3, g0)


def test_induced_matches_model_inversion_action():
    s3 = symmetric_group(3)
    g0 = subgroup_generated(s3, [s3.index_of((1, 0, 2))])
    c3 = cyclic_group(3)
    g0g = g0.as_group()

    def apply(a, t):
        return a if t == 0 else c3.inv(a)

    _check_instance(c3, s3, g0, GroupAction(g0g, c3, apply))


def test_induced_matches_model_full_g0():
    c4 = cyclic_group(4)
    g0 = full_subgroup(c4)
    _check_instance(cyclic_group(2), c4, g0)


def test_induced_matches_model_regular():
    c2 = cyclic_group(2)
    from aslkit.core import trivial_subgroup
    _check_instance(cyclic_group(3), c2, trivial_subgroup(c2))
