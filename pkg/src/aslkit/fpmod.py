"""Linear algebra over prime fields: invariant subspaces and function-space chains.

Subspaces are held in reduced row-echelon form, which is unique per subspace,
so equal subspaces always compare equal basis-by-basis.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import Group, Subgroup
from .errors import DimensionTooLarge, NotAnAction, PropositionViolated
from .series import derived_series, generalized_derived_series

VECTOR_ENUM_CAP = 2 ** 20
SET_SIZE_CAP = 4096


def rref(p, rows):
    """Reduced row-echelon form over F_p; returns a tuple of nonzero rows.

    Rows are inserted one at a time, reduced against the running basis,
    normalized, and back-substituted, so the output is the canonical basis of
    the span: pivots are 1, strictly increasing, alone in their column.
    """
    basis = []
    for r in rows:
        r = [x % p for x in r]
        for b in basis:
            lead = next(i for i, x in enumerate(b) if x)
            if r[lead]:
                c = r[lead]
                r = [(a - c * bb) % p for a, bb in zip(r, b)]
        if not any(r):
            continue
        lead = next(i for i, x in enumerate(r) if x)
        inv = pow(r[lead], -1, p)
        r = [(x * inv) % p for x in r]
        for i, b in enumerate(basis):
            if b[lead]:
                c = b[lead]
                basis[i] = [(a - c * rr) % p for a, rr in zip(b, r)]
        basis.append(r)
    basis.sort(key=lambda b: next(i for i, x in enumerate(b) if x))
    return tuple(tuple(b) for b in basis)


@dataclass(frozen=True)
class FpSubspace:
    """Subspace of F_p^k in canonical reduced-echelon basis."""
    p: int
    ambient_dim: int
    basis: tuple

    @staticmethod
    def from_vectors(p, ambient_dim, vectors):
        return FpSubspace(p, ambient_dim, rref(p, list(vectors)))

    @property
    def dim(self):
        return len(self.basis)

    def contains(self, vec):
        v = [x % self.p for x in vec]
        for b in self.basis:
            lead = next((i for i, x in enumerate(b) if x), None)
            if lead is not None and v[lead]:
                c = v[lead]
                v = [(a - c * pb) % self.p for a, pb in zip(v, b)]
        return not any(v)

    def is_zero(self):
        return not self.basis

    def contains_space(self, other):
        return all(self.contains(b) for b in other.basis)


def _mat_vec(p, vec, mat):
    """Row vector times matrix, mod p (vectors act on the right)."""
    k = len(vec)
    return tuple(sum(vec[i] * mat[i][j] for i in range(k)) % p
                 for j in range(k))


def _mat_mul(p, A, B):
    k = len(A)
    return tuple(tuple(sum(A[i][t] * B[t][j] for t in range(k)) % p
                       for j in range(k)) for i in range(k))


class LinearAction:
    """Right matrix action of a finite group on F_p^dim.

    Matrices are supplied for the actor's generators and extended along the
    Cayley graph; every re-encounter is compared, which validates the
    representation property on all pairs.
    """

    def __init__(self, actor, p, dim, gen_matrices):
        self.actor = actor
        self.p = p
        self.dim = dim
        gens = actor.generators
        if len(gen_matrices) != len(gens):
            raise NotAnAction("one matrix per actor generator required")
        norm = []
        for M in gen_matrices:
            M = tuple(tuple(x % p for x in row) for row in M)
            if len(M) != dim or any(len(r) != dim for r in M):
                raise NotAnAction(f"matrices must be {dim}x{dim}")
            if len(rref(p, M)) != dim:
                raise NotAnAction("generator matrix is singular")
            norm.append(M)
        ident = tuple(tuple(1 if i == j else 0 for j in range(dim))
                      for i in range(dim))
        mats = [None] * actor.order
        mats[0] = ident
        queue = [0]
        k = 0
        while k < len(queue):
            x = queue[k]
            k += 1
            for g, Mg in zip(gens, norm):
                y = actor.mul(x, g)
                My = _mat_mul(p, mats[x], Mg)
                if mats[y] is None:
                    mats[y] = My
                    queue.append(y)
                elif mats[y] != My:
                    raise NotAnAction("matrices do not define a representation")
        if len(queue) != actor.order:
            raise NotAnAction("generators of the actor do not generate it")
        self.matrices = tuple(mats)

    def matrix(self, i):
        return self.matrices[i]

    def apply_vec(self, vec, i):
        return _mat_vec(self.p, vec, self.matrices[i])

    def is_trivial(self):
        ident = self.matrices[0]
        return all(M == ident for M in self.matrices)


def vector_group(p, dim, closure_cap=VECTOR_ENUM_CAP):
    """The additive group F_p^dim with tuple values."""
    if p ** dim > closure_cap:
        raise DimensionTooLarge(f"p^dim = {p ** dim} exceeds cap")
    values = [tuple(reversed(v))
              for v in itertools.product(range(p), repeat=dim)]

    def vmul(a, b):
        return tuple((x + y) % p for x, y in zip(a, b))

    def vinv(a):
        return tuple((-x) % p for x in a)

    G = Group(values, vmul, vinv, lambda v: "(" + ",".join(map(str, v)) + ")",
              name=f"F{p}^{dim}", kind="vector")
    gens = []
    for i in range(dim):
        e = [0] * dim
        e[i] = 1
        gens.append(G.index_of(tuple(e)))
    G.generators = gens
    return G


def as_group_action(act: LinearAction):
    """Wrap a LinearAction as a GroupAction on the vector group F_p^dim."""
    from .core import GroupAction
    V = vector_group(act.p, act.dim)

    def apply(a_idx, g_idx):
        return V.index_of(act.apply_vec(V.value(a_idx), g_idx))

    return GroupAction(act.actor, V, apply)


def _decode_vec(n, p, dim):
    out = []
    for _ in range(dim):
        out.append(n % p)
        n //= p
    return tuple(out)


def invariant_span(act, vectors):
    """Smallest act-invariant subspace containing the given vectors."""
    p, dim = act.p, act.dim
    gens = [act.matrices[g] for g in act.actor.generators]
    rows = list(vectors)
    space = FpSubspace.from_vectors(p, dim, rows)
    frontier = list(space.basis)
    while frontier:
        new = []
        for v in frontier:
            for M in gens:
                w = _mat_vec(p, v, M)
                if not space.contains(w):
                    new.append(w)
        if not new:
            break
        space = FpSubspace.from_vectors(p, dim, list(space.basis) + new)
        frontier = new
    return space


def is_irreducible(act, vector_cap=VECTOR_ENUM_CAP):
    """Exhaustive test: every nonzero vector must generate the whole space."""
    p, dim = act.p, act.dim
    if dim < 1:
        raise DimensionTooLarge("dimension must be at least 1")
    total = p ** dim
    if total > vector_cap:
        raise DimensionTooLarge(f"{total} vectors exceed cap {vector_cap}")
    if dim == 1:
        return True
    for n in range(1, total):
        v = _decode_vec(n, p, dim)
        if invariant_span(act, [v]).dim < dim:
            return False
    return True


def coinvariant_span(act, vector_cap=VECTOR_ENUM_CAP):
    """Span of {a^s - a} over all vectors a and all actor elements s.

    Linearity in a reduces this to the row spaces of (M_s - I); the result is
    checked to be invariant, and equals the full space exactly when the
    action is nontrivial and irreducible.
    """
    p, dim = act.p, act.dim
    if p ** dim > vector_cap:
        raise DimensionTooLarge("vector cap exceeded")
    rows = []
    for M in act.matrices:
        for i in range(dim):
            row = tuple((M[i][j] - (1 if i == j else 0)) % p
                        for j in range(dim))
            if any(row):
                rows.append(row)
    span = FpSubspace.from_vectors(p, dim, rows)
    for b in span.basis:
        for g in act.actor.generators:
            if not span.contains(act.apply_vec(b, g)):
                raise PropositionViolated("coinvariant span is not invariant")
    return span


# -- finite right G-sets ----------------------------------------------------------


class GSet:
    """Finite right G-set; the action is validated along the Cayley graph."""

    def __init__(self, group, size, gen_images, labels=None):
        self.group = group
        self.size = size
        gens = group.generators
        if len(gen_images) != len(gens):
            raise NotAnAction("one point permutation per group generator")
        for img in gen_images:
            if sorted(img) != list(range(size)):
                raise NotAnAction("generator image is not a permutation")
        perms = [None] * group.order
        perms[0] = tuple(range(size))
        queue = [0]
        k = 0
        while k < len(queue):
            x = queue[k]
            k += 1
            for g, pg in zip(gens, gen_images):
                y = group.mul(x, g)
                # right action: x.(ug) = (x.u).g
                py = tuple(pg[perms[x][pt]] for pt in range(size))
                if perms[y] is None:
                    perms[y] = py
                    queue.append(y)
                elif perms[y] != py:
                    raise NotAnAction("images do not define an action")
        if len(queue) != group.order:
            raise NotAnAction("group generators do not generate")
        self._perms = perms
        self.labels = tuple(labels) if labels else tuple(
            str(i) for i in range(size))

    def apply(self, point, g):
        return self._perms[g][point]

    def orbit(self, point, subgroup: Subgroup):
        seen = {point}
        queue = [point]
        gens = subgroup.gens()
        k = 0
        while k < len(queue):
            x = queue[k]
            k += 1
            for g in gens:
                y = self._perms[g][x]
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return sorted(seen)


def coset_space(G, H: Subgroup):
    """Right cosets H\\G as a right G-set; the coset of the identity is first."""
    n = G.order
    rep_of = [-1] * n
    reps = []
    for i in range(n):
        if rep_of[i] == -1:
            reps.append(i)
            for h in H.members:
                rep_of[G.mul(h, i)] = i
    pos = {r: k for k, r in enumerate(reps)}
    gen_images = []
    for g in G.generators:
        gen_images.append(tuple(pos[rep_of[G.mul(r, g)]] for r in reps))
    labels = [G.label(r) for r in reps]
    return GSet(G, len(reps), gen_images, labels=labels)


def v_chain(G, X: GSet, p, depth, set_cap=SET_SIZE_CAP):
    """Chain V_0 >= V_1 >= ... of subspaces of F_p^X.

    V_0 is the full function space; V_{i+1} is spanned by f - f^g with f in
    V_i and g in the i-th term of the generalized derived series, where
    f^g(x) = f(x.g). Basis vectors of V_i and generators of the series term
    suffice: the defining set is linear in f, and f - f^w telescopes over a
    word w = g.w' as (f - f^{w'}) + (f'' - f''^g) with f'' = f^{w'} in V_i,
    since each V_i is stable under the whole group.
    """
    if X.group is not G:
        raise NotAnAction("X must be a G-set for the given G")
    if X.size > set_cap:
        raise DimensionTooLarge(f"|X| = {X.size} exceeds cap {set_cap}")
    series = generalized_derived_series(G)
    chain = [FpSubspace(p, X.size,
                        tuple(tuple(1 if i == j else 0 for j in range(X.size))
                              for i in range(X.size)))]
    for i in range(depth):
        term = series.terms[i] if i < len(series.terms) else series.terms[-1]
        gens = term.gens()
        rows = []
        for b in chain[-1].basis:
            for g in gens:
                moved = tuple(b[X.apply(x, g)] for x in range(X.size))
                row = tuple((a - c) % p for a, c in zip(b, moved))
                if any(row):
                    rows.append(row)
        chain.append(FpSubspace.from_vectors(p, X.size, rows))
    return chain


def orbit_hypothesis(G, X: GSet, m):
    """True iff some point has an orbit under G^(m) larger than 2^m."""
    series = generalized_derived_series(G)
    term = series.terms[m] if m < len(series.terms) else series.terms[-1]
    bound = 2 ** m
    return any(len(X.orbit(x, term)) > bound for x in range(X.size))


def unipotent_derived_length(n, p, closure_cap=None):
    """Derived length of the unitriangular group U(n,p); always <= n-1."""
    from .core import CLOSURE_CAP
    from .matgroups import unitriangular_group
    if closure_cap is None:
        closure_cap = CLOSURE_CAP
    U = unitriangular_group(n, p, closure_cap=closure_cap)
    rep = derived_series(U)
    if not rep.terminates:
        raise PropositionViolated("unitriangular group must be solvable")
    if rep.length > n - 1:
        raise PropositionViolated(
            f"derived length {rep.length} exceeds {n - 1}")
    return rep.length
