"""Normal subgroup structure: closures, lattices, simplicity, decompositions.

The full normal lattice is computed as the join-closure of the normal
closures of single conjugacy classes; every normal subgroup is a union of
classes, so this enumeration is complete while staying proportional to the
lattice size rather than the (often huge) subgroup count.
"""

from __future__ import annotations

from .core import (
    ClosureBuilder,
    Subgroup,
    conjugacy_classes,
    full_subgroup,
    is_abelian,
    normal_closure,
    product_embedding,
    subgroup_generated,
    trivial_subgroup,
)
from .errors import (
    DecompositionFailed,
    NotNormal,
    NotSimpleFactor,
    TooManyClasses,
    TrivialGroup,
)

LATTICE_CLASS_CAP = 64


class NormalLattice:
    """All normal subgroups of a group, sorted by (order, member set)."""

    def __init__(self, parent, subgroups):
        self.parent = parent
        self.subgroups = tuple(
            sorted(subgroups, key=lambda s: (s.order, s.members)))

    def __len__(self):
        return len(self.subgroups)

    def __iter__(self):
        return iter(self.subgroups)

    def inclusion_matrix(self):
        subs = self.subgroups
        return [[1 if a.member_set <= b.member_set else 0 for b in subs]
                for a in subs]

    def maximal_proper(self):
        """Proper members maximal under inclusion."""
        full = self.parent.order
        proper = [s for s in self.subgroups if s.order < full]
        out = []
        for s in proper:
            if not any(s.member_set < t.member_set for t in proper):
                out.append(s)
        return out


def class_closures(G):
    """Normal closure of each single conjugacy class, deduplicated.

    The normal closure of one representative already contains the class.
    """
    cached = G._cache.get("class_closures")
    if cached is None:
        seen = {}
        for cls in conjugacy_classes(G):
            sub = normal_closure(G, (cls[0],))
            seen.setdefault(sub.member_set, sub)
        cached = tuple(sorted(seen.values(), key=lambda s: (s.order, s.members)))
        G._cache["class_closures"] = cached
    return cached


def all_normal_subgroups(G, max_classes=LATTICE_CLASS_CAP):
    """Complete NormalLattice via join-closure of single-class closures."""
    lat = G._cache.get("normal_lattice")
    if lat is not None:
        return lat
    ncl = len(conjugacy_classes(G))
    if ncl > max_classes:
        raise TooManyClasses(
            f"{G.name}: {ncl} conjugacy classes exceed cap {max_classes}")
    found = {frozenset([0]): trivial_subgroup(G)}
    for sub in class_closures(G):
        found.setdefault(sub.member_set, sub)
    worklist = list(found.values())
    while worklist:
        new = []
        items = list(found.values())
        for a in worklist:
            for b in items:
                if a.member_set <= b.member_set or b.member_set <= a.member_set:
                    continue
                j = a.join(b)
                if j.member_set not in found:
                    found[j.member_set] = j
                    new.append(j)
        worklist = new
    if frozenset(range(G.order)) not in found:
        found[frozenset(range(G.order))] = full_subgroup(G)
    lat = NormalLattice(G, found.values())
    G._cache["normal_lattice"] = lat
    return lat


def maximal_normal_subgroups(G, max_classes=LATTICE_CLASS_CAP):
    """Proper normal subgroups maximal under inclusion."""
    if G.order == 1:
        raise TrivialGroup("the trivial group has no proper subgroup")
    return all_normal_subgroups(G, max_classes=max_classes).maximal_proper()


def is_simple(G):
    """True iff every non-identity class generates G as a normal subgroup."""
    if G.order == 1:
        raise TrivialGroup("simplicity undefined for the trivial group")
    flag = G._cache.get("simple")
    if flag is None:
        flag = all(sub.order in (1, G.order) for sub in class_closures(G))
        G._cache["simple"] = flag
    return flag


def melnikov_subgroup(G, max_classes=LATTICE_CLASS_CAP):
    """Intersection of all maximal normal subgroups."""
    maxn = maximal_normal_subgroups(G, max_classes=max_classes)
    out = full_subgroup(G)
    for s in maxn:
        out = out.intersect(s)
    out.normal = True
    return out


# -- solvability --------------------------------------------------------------


def subgroup_derived(H):
    """Derived subgroup of a Subgroup, computed inside the parent."""
    G = H.parent
    gens = H.gens()
    comms = []
    for x in gens:
        xi = G.inv(x)
        for y in gens:
            c = G.mul(G.mul(xi, G.inv(y)), G.mul(x, y))
            if c != 0:
                comms.append(c)
    if not comms:
        return trivial_subgroup(G)
    # normal closure within H: conjugate by H's generators only
    cb = ClosureBuilder(G)
    for c in comms:
        cb.add(c)
    while True:
        grew = False
        for g in gens:
            for x in list(cb.gens):
                if cb.add(G.conj(x, g)):
                    grew = True
        if not grew:
            return Subgroup(G, cb.sorted_members(), gens=tuple(cb.gens))


def is_solvable_subgroup(H):
    """Ordinary derived series of H terminates at the identity."""
    cur = H
    while cur.order > 1:
        nxt = subgroup_derived(cur)
        if nxt.order == cur.order:
            return False
        cur = nxt
    return True


def is_solvable(G):
    flag = G._cache.get("solvable")
    if flag is None:
        flag = is_solvable_subgroup(full_subgroup(G))
        G._cache["solvable"] = flag
    return flag


def solvable_radical(G):
    """Largest solvable normal subgroup.

    Equals the join of all conjugacy classes whose normal closure is
    solvable: any solvable normal subgroup is a union of such classes, and a
    product of solvable normal subgroups is solvable.
    """
    rad = G._cache.get("radical")
    if rad is None:
        seeds = []
        for sub in class_closures(G):
            if sub.order == 1:
                continue
            if is_solvable_subgroup(sub):
                seeds.extend(sub.gens())
        rad = subgroup_generated(G, seeds, normal=True)
        G._cache["radical"] = rad
    return rad


# -- product decomposition ------------------------------------------------------


def product_normal_decomposition(A, simples, N, max_classes=LATTICE_CLASS_CAP):
    """Split a normal subgroup of A x S_1 x ... x S_k along the factors.

    A must be abelian and every S_i nonabelian simple; then every normal N
    equals (N n A) x prod_{i in J} S_i for a unique index set J. Returns
    (N n A as a Subgroup of the product, J). DecompositionFailed signals an
    implementation bug since existence is guaranteed.
    """
    if not is_abelian(A):
        raise NotSimpleFactor("first factor must be abelian")
    for S in simples:
        if is_abelian(S) or not is_simple(S):
            raise NotSimpleFactor(f"{S.name} is not nonabelian simple")
    P = N.parent
    factors = getattr(P, "factors", None)
    if factors is None or len(factors) != 1 + len(simples):
        raise NotNormal("N must live in the direct product of A and the simples")
    N.require_normal()

    a_embed = product_embedding(P, 0)
    a_members = set(a_embed.mapping)
    n_cap_a = Subgroup(P, N.member_set & a_members, normal=True)

    J = []
    expected = n_cap_a.order
    for k in range(len(simples)):
        emb = product_embedding(P, k + 1)
        s_members = set(emb.mapping)
        if s_members <= N.member_set:
            J.append(k)
            expected *= simples[k].order
    if expected != N.order:
        raise DecompositionFailed(
            f"|N|={N.order} but decomposition predicts {expected}")
    # element-by-element: every member must have its k-th coordinate trivial
    # for k outside J and its A-coordinate inside N n A
    j_set = set(J)
    for i in N.members:
        coords = P.value(i)
        a_only = (coords[0],) + (0,) * len(simples)
        if P.index_of(a_only) not in n_cap_a.member_set:
            raise DecompositionFailed("A-coordinate escapes N n A")
        for k in range(len(simples)):
            if k not in j_set and coords[k + 1] != 0:
                raise DecompositionFailed(
                    f"coordinate {k} nontrivial outside J")
    return n_cap_a, tuple(J)
