"""Induced function groups and twisted wreath products.

An induced element is a function f from G to A with f(s*t) = f(s)^t for t in
the acting subgroup G0, so f is determined by its values on a fixed set of
left coset representatives of G0 in G. Representatives are the minimal
element index of each coset, sorted ascending, which puts the identity coset
first; f is stored as the tuple of A-indices at those representatives, the
unique compact faithful model of the function.

G acts on the induced group from the right by f^s(t) = f(s*t); the twisted
wreath product is the semidirect product (induced group) x| G under this
action, with the semidirect convention from the core module.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import (
    CLOSURE_CAP,
    DENSE_CAP,
    Group,
    GroupAction,
    Homomorphism,
    Subgroup,
    full_subgroup,
    quotient,
    semidirect_product,
    trivial_subgroup,
)
from .errors import CapExceeded, NotAnAction, NotInvariant, PropositionViolated
from .series import generalized_derived_series


def left_coset_reps(G, G0: Subgroup):
    """Minimal-index representatives of the left cosets sG0, sorted."""
    n = G.order
    rep_of = [-1] * n
    reps = []
    for i in range(n):
        if rep_of[i] == -1:
            reps.append(i)
            for t in G0.members:
                rep_of[G.mul(i, t)] = i
    return reps, rep_of


def induced_group(A, G, G0: Subgroup, act: GroupAction = None,
                  closure_cap=CLOSURE_CAP, dense_cap=DENSE_CAP,
                  validate=False):
    """Group of G0-equivariant functions G -> A, plus the right G-action on it.

    act is a right action of the materialized G0 on A; None means trivial.
    Returns (Ind, action of G on Ind).
    """
    G0_group = G0.as_group()
    if act is None:
        from .core import trivial_action
        act = trivial_action(G0_group, A)
    if act.space is not A or act.actor is not G0_group:
        raise NotAnAction("action must act on A with actor G0.as_group()")
    if validate:
        act.validate()
    reps, rep_of = left_coset_reps(G, G0)
    m = len(reps)
    if A.order ** m > closure_cap:
        raise CapExceeded(
            f"|A|^[G:G0] = {A.order ** m} exceeds cap {closure_cap}")
    g0_pos = {p: i for i, p in enumerate(G0.members)}
    rep_pos = {r: i for i, r in enumerate(reps)}
    # decomposition s*r_i = r_j * t with t in G0, tabulated per (s, i)
    dec = []
    for s in range(G.order):
        row = []
        for i in range(m):
            sri = G.mul(s, reps[i])
            rj = rep_of[sri]
            t = G.mul(G.inv(rj), sri)
            row.append((rep_pos[rj], g0_pos[t]))
        dec.append(tuple(row))

    def vmul(f1, f2):
        return tuple(A.mul(a, b) for a, b in zip(f1, f2))

    def vinv(f):
        return tuple(A.inv(a) for a in f)

    def labeler(f):
        return "[" + ", ".join(A.label(a) for a in f) + "]"

    values = itertools.product(range(A.order), repeat=m)
    Ind = Group(values, vmul, vinv, labeler,
                name=f"Ind[{A.name}; {G.name}/{m}]", kind="induced")
    gens = []
    for i in range(m):
        for g in A.generators:
            f = [0] * m
            f[i] = g
            gens.append(Ind.index_of(tuple(f)))
    Ind.generators = gens
    app = act.apply
    trivial = all(app(a, t) == a for a in range(A.order)
                  for t in range(G0_group.order))

    def ind_index(f):
        n = 0
        for a in f:
            n = n * A.order + a
        return n

    # itertools.product enumerates big-endian, so the index is positional
    def g_apply(f_idx, s):
        f = Ind.value(f_idx)
        row = dec[s]
        if trivial:
            moved = tuple(f[j] for j, _ in row)
        else:
            moved = tuple(f[j] if t == 0 else app(f[j], t) for j, t in row)
        return ind_index(moved)

    g_action = GroupAction(G, Ind, g_apply)
    Ind.structure = {"induced": True, "reps": tuple(reps), "m": m,
                     "a": A, "g": G, "g0": G0, "act": act}
    return Ind, g_action


@dataclass
class WreathElement:
    """One element of a twisted wreath product: an induced function plus an
    outer part, with labels resolved against A and G."""
    fn: dict
    outer: str
    index: int


@dataclass
class WreathProduct:
    """A wr_{G0} G with its distinguished subgroups."""
    group: Group
    ind: Subgroup          # the induced normal subgroup
    ind_g0: Subgroup       # Ind x| G0
    g_copy: Subgroup       # the complement copy of G
    fix1: Subgroup         # {f : f(1) = 1} inside Ind
    a: Group
    g: Group
    g0: Subgroup
    ind_group: Group
    reps: tuple
    action: GroupAction    # the action of G on Ind

    def element(self, w_idx):
        f_idx, s = self.group.value(w_idx)
        f = self.ind_group.value(f_idx)
        fn = {self.g.label(r): self.a.label(a)
              for r, a in zip(self.reps, f)}
        return WreathElement(fn=fn, outer=self.g.label(s), index=w_idx)


def twisted_wreath_product(A, G, G0: Subgroup, act: GroupAction = None,
                           closure_cap=CLOSURE_CAP, dense_cap=DENSE_CAP,
                           validate=False):
    """Build A wr_{G0} G = Ind x| G with its distinguished subgroups."""
    Ind, g_action = induced_group(A, G, G0, act, closure_cap=closure_cap,
                                  dense_cap=dense_cap, validate=validate)
    if Ind.order * G.order > closure_cap:
        raise CapExceeded("wreath order exceeds cap")
    m = Ind.structure["m"]
    W = semidirect_product(Ind, G, g_action,
                           name=f"{A.name} wr[{G0.order}] {G.name}",
                           validate=False, closure_cap=closure_cap)
    # value (f_idx, s) sits at index f_idx * |G| + s
    ind_members = [f * G.order for f in range(Ind.order)]
    ind_sub = Subgroup(W, ind_members, normal=True,
                       gens=[g * G.order for g in Ind.generators])
    indg0_members = [f * G.order + s for f in range(Ind.order)
                     for s in G0.members]
    indg0 = Subgroup(W, indg0_members)
    g_members = list(range(G.order))
    g_copy = Subgroup(W, g_members, gens=list(G.generators))
    fix1_members = []
    for f in range(Ind.order):
        if Ind.value(f)[0] == 0:
            fix1_members.append(f * G.order)
    fix1 = Subgroup(W, fix1_members)
    return WreathProduct(group=W, ind=ind_sub, ind_g0=indg0, g_copy=g_copy,
                         fix1=fix1, a=A, g=G, g0=G0, ind_group=Ind,
                         reps=Ind.structure["reps"], action=g_action)


def realization_chain(W: WreathProduct):
    """The five-term chain W >= Ind x| G0 >= Ind >= {f : f(1)=1} >= 1.

    Returns (subgroups, successive indices); the indices equal
    [G:G0], |G0|, |A|, |A|^([G:G0]-1).
    """
    chain = [full_subgroup(W.group), W.ind_g0, W.ind, W.fix1,
             trivial_subgroup(W.group)]
    indices = []
    for big, small in zip(chain, chain[1:]):
        if big.order % small.order:
            raise PropositionViolated("chain member orders must divide")
        indices.append(big.order // small.order)
    m = len(W.reps)
    expected = (m, W.g0.order, W.a.order, W.a.order ** (m - 1))
    if tuple(indices) != expected:
        raise PropositionViolated(
            f"chain indices {indices} differ from {expected}")
    return chain, tuple(indices)


def wreath_quotient(A, A0: Subgroup, G, G0: Subgroup,
                    act: GroupAction = None, closure_cap=CLOSURE_CAP):
    """Surjection A wr G -> (A/A0) wr G; kernel is Ind(A0).

    A0 must be normal in A and invariant under the G0-action.
    """
    G0_group = G0.as_group()
    if act is None:
        from .core import trivial_action
        act = trivial_action(G0_group, A)
    A0.require_normal()
    app = act.apply
    for a in A0.members:
        for t in range(G0_group.order):
            if app(a, t) not in A0.member_set:
                raise NotInvariant("A0 is not G0-invariant")
    Abar, pi = quotient(A, A0)

    def bar_apply(q_idx, t):
        return pi(app(Abar.value(q_idx), t))

    act_bar = GroupAction(G0_group, Abar, bar_apply)
    W = twisted_wreath_product(A, G, G0, act, closure_cap=closure_cap)
    Wbar = twisted_wreath_product(Abar, G, G0, act_bar,
                                  closure_cap=closure_cap)
    Ind, IndBar = W.ind_group, Wbar.ind_group
    mapping = []
    for w in range(W.group.order):
        f_idx, s = W.group.value(w)
        fbar = tuple(pi(a) for a in Ind.value(f_idx))
        mapping.append(Wbar.group.index_of((IndBar.index_of(fbar), s)))
    hom = Homomorphism(W.group, Wbar.group, mapping)
    hom.wreath_source = W
    hom.wreath_target = Wbar
    return hom


# -- growth of the series in wreath products ----------------------------------------


def msigma_hypothesis(G, G0: Subgroup, m):
    """True iff the coset count of G0 in G^(m) G0 exceeds 2^m."""
    series = generalized_derived_series(G, max_terms=m + 1)
    term = series.terms[m] if m < len(series.terms) else series.terms[-1]
    inter = len(term.member_set & G0.member_set)
    index = term.order // inter
    return index > 2 ** m


def msigma_witness(A, G, G0: Subgroup, act: GroupAction = None, m=0,
                   closure_cap=CLOSURE_CAP):
    """Nontrivial element of (A wr G)^(m+1) n Ind, or None.

    When the index hypothesis holds a witness must exist; failing to find
    one then raises PropositionViolated. Tie-break: least index in the
    wreath group's canonical order.
    """
    if A.order == 1:
        raise NotAnAction("A must be nontrivial")
    hyp = msigma_hypothesis(G, G0, m)
    W = twisted_wreath_product(A, G, G0, act, closure_cap=closure_cap)
    series = generalized_derived_series(W.group, max_terms=m + 2)
    if m + 1 < len(series.terms):
        term = series.terms[m + 1]
    else:
        term = series.terms[-1]
        if term.order > 1:
            raise CapExceeded("series truncated before reaching depth")
    inter = sorted(term.member_set & W.ind.member_set - {0})
    if inter:
        return W.element(inter[0])
    if hyp:
        raise PropositionViolated(
            "index hypothesis holds but no witness found")
    return None
