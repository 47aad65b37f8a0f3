"""Finite groups behind a uniform index-based multiplication oracle.

Elements of a group are integers 0..order-1; index 0 is always the identity.
Each group carries immutable element values (permutation tuples, residues,
index pairs, ...) plus a value-level multiplication, and memoizes products.
Two storage strategies exist: "dense-table" groups (order <= dense cap) may
materialize full Cayley rows; "on-the-fly" groups only keep the product memo.
Rows are filled lazily in both cases, so construction cost stays linear.

Conventions, used consistently everywhere:
  - permutations multiply left-to-right: (p*q)(x) = q(p(x)), i.e. everything
    acts on the right;
  - semidirect products use (n1,h1)(n2,h2) = (n1^h2 * n2, h1*h2) for a right
    action of H on N by automorphisms.
"""

from __future__ import annotations

import itertools
import random
import re

from .errors import (
    CapExceeded,
    MalformedCycle,
    NotAnAction,
    NotAutomorphisms,
    NotNormal,
    NotSurjective,
)

DENSE_CAP = 5000
CLOSURE_CAP = 100000

# Validation policy: exhaustive up to this order, sampled beyond it.
EXHAUSTIVE_ORDER = 512
SAMPLE_COUNT = 10000
SAMPLE_SEED = 0


class Group:
    """A finite group given by an indexed element table and a product oracle."""

    def __init__(self, values, vmul, vinv, labeler, name="group",
                 generators=None, dense_cap=DENSE_CAP, kind="table"):
        values = list(values)
        self.order = len(values)
        self._values = values
        self._index = {v: i for i, v in enumerate(values)}
        if len(self._index) != self.order:
            raise ValueError("duplicate element values")
        self._vmul = vmul
        self._vinv = vinv
        self.labels = tuple(labeler(v) for v in values)
        self.name = name
        self.kind = kind
        self.identity = 0
        self.backend = "dense-table" if self.order <= dense_cap else "on-the-fly"
        self._mul_cache = {}
        self._rows = [None] * self.order if self.backend == "dense-table" else None
        self._inv_cache = [None] * self.order
        self._cache = {}
        self._generators = None
        if generators is not None:
            self.generators = generators

    @property
    def generators(self):
        if self._generators is None:
            self._generators = greedy_generators_from(self)
        return self._generators

    @generators.setter
    def generators(self, value):
        self._generators = tuple(dict.fromkeys(g for g in value if g != 0))

    # -- oracle ------------------------------------------------------------

    def mul(self, i, j):
        if self._rows is not None:
            row = self._rows[i]
            if row is not None:
                return row[j]
        key = i * self.order + j
        r = self._mul_cache.get(key)
        if r is None:
            r = self._index[self._vmul(self._values[i], self._values[j])]
            self._mul_cache[key] = r
        return r

    def row(self, i):
        """Full Cayley row of element i (cached); dense-table groups only."""
        if self._rows is None:
            raise CapExceeded(f"group of order {self.order} has no dense table")
        row = self._rows[i]
        if row is None:
            vi = self._values[i]
            idx = self._index
            vmul = self._vmul
            row = [idx[vmul(vi, v)] for v in self._values]
            self._rows[i] = row
        return row

    def cayley_table(self):
        """Full Cayley table as a list of rows; dense-table groups only."""
        return [self.row(i) for i in range(self.order)]

    def inv(self, i):
        r = self._inv_cache[i]
        if r is None:
            r = self._index[self._vinv(self._values[i])]
            self._inv_cache[i] = r
        return r

    def conj(self, x, g):
        """g^-1 * x * g."""
        return self.mul(self.inv(g), self.mul(x, g))

    def value(self, i):
        return self._values[i]

    def label(self, i):
        return self.labels[i]

    def index_of(self, value):
        return self._index[value]

    def element_order(self, i):
        orders = self._cache.get("element_orders")
        if orders is None:
            orders = [None] * self.order
            self._cache["element_orders"] = orders
        if orders[i] is None:
            k, x = 1, i
            while x != 0:
                x = self.mul(x, i)
                k += 1
            orders[i] = k
        return orders[i]

    def elements(self):
        return range(self.order)

    def __repr__(self):
        return f"<Group {self.name!r} order {self.order} ({self.backend})>"


def generate_group(identity_value, gen_values, vmul, vinv, labeler, name,
                   closure_cap=CLOSURE_CAP, dense_cap=DENSE_CAP, kind="table"):
    """Close generator values under multiplication, breadth-first.

    Canonical element order: identity first, then BFS discovery order over
    right-multiplication by the generators, which makes every downstream
    report deterministic.
    """
    gen_values = [g for g in dict.fromkeys(gen_values) if g != identity_value]
    values = [identity_value]
    index = {identity_value: 0}
    k = 0
    while k < len(values):
        x = values[k]
        k += 1
        for g in gen_values:
            y = vmul(x, g)
            if y not in index:
                index[y] = len(values)
                values.append(y)
                if len(values) > closure_cap:
                    raise CapExceeded(
                        f"closure of {name!r} exceeded cap {closure_cap}")
    gen_indices = [index[g] for g in gen_values]
    return Group(values, vmul, vinv, labeler, name=name,
                 generators=gen_indices, dense_cap=dense_cap, kind=kind)


# -- subgroups ---------------------------------------------------------------


class Subgroup:
    """Subset of a parent group's indices, closed under product and inverse.

    normal is True/False once verified and None while unknown; helpers that
    guarantee normality by construction set it to True directly.
    """

    def __init__(self, parent, members, normal=None, gens=None):
        self.parent = parent
        self.members = tuple(sorted(members))
        self.member_set = frozenset(self.members)
        self.normal = normal
        self._gens = tuple(gens) if gens is not None else None
        self._as_group = None

    @property
    def order(self):
        return len(self.members)

    def __contains__(self, i):
        return i in self.member_set

    def __eq__(self, other):
        return (isinstance(other, Subgroup) and other.parent is self.parent
                and other.member_set == self.member_set)

    def __hash__(self):
        return hash((id(self.parent), self.member_set))

    def __repr__(self):
        return f"<Subgroup order {self.order} of {self.parent.name!r}>"

    def is_trivial(self):
        return self.order == 1

    def is_full(self):
        return self.order == self.parent.order

    def gens(self):
        if self._gens is None:
            self._gens = greedy_generators(self.parent, self.members)
        return self._gens

    def verify_normal(self):
        """Check conjugation stability; caches and returns the verdict."""
        if self.normal is None:
            G = self.parent
            ok = all(G.conj(x, g) in self.member_set
                     for g in G.generators for x in self.gens())
            self.normal = ok
        return self.normal

    def require_normal(self):
        if not self.verify_normal():
            raise NotNormal(f"subgroup of order {self.order} is not normal "
                            f"in {self.parent.name!r}")

    def as_group(self):
        """Materialize as a standalone Group; element values are parent indices."""
        if self._as_group is None:
            G = self.parent
            name = f"{G.name}|sub{self.order}"
            H = Group(self.members, G.mul, G.inv, G.label, name=name,
                      kind="subgroup")
            if self._gens is not None:
                pos = {p: i for i, p in enumerate(self.members)}
                H.generators = [pos[g] for g in self._gens]
            H.parent_indices = self.members
            self._as_group = H
        return self._as_group

    def intersect(self, other):
        assert other.parent is self.parent
        normal = True if self.normal and other.normal else None
        return Subgroup(self.parent, self.member_set & other.member_set,
                        normal=normal)

    def join(self, other):
        assert other.parent is self.parent
        members = subgroup_closure(self.parent, self.gens() + other.gens())
        normal = True if self.normal and other.normal else None
        return Subgroup(self.parent, members, normal=normal,
                        gens=tuple(dict.fromkeys(self.gens() + other.gens())))


def trivial_subgroup(G):
    return Subgroup(G, (0,), normal=True, gens=())


def full_subgroup(G):
    return Subgroup(G, range(G.order), normal=True, gens=G.generators)


class ClosureBuilder:
    """Incremental subgroup closure inside a parent group.

    Elements are only adopted as generators when they are not already in the
    closure, so each adoption at least doubles the subgroup and the generator
    list stays logarithmic in the subgroup order. Total cost is
    O(|H| * #generators) multiplications.
    """

    def __init__(self, G):
        self.G = G
        self.member_set = {0}
        self.mlist = [0]
        self.gens = []
        self._done = [0]

    def add(self, g):
        """Adopt g as a generator if new; returns True when the closure grew."""
        if g in self.member_set:
            return False
        self.gens.append(g)
        self.member_set.add(g)
        self.mlist.append(g)
        self._done.append(0)
        self._sweep()
        return True

    def _sweep(self):
        mul = self.G.mul
        gens = self.gens
        mlist = self.mlist
        done = self._done
        member_set = self.member_set
        k = 0
        while k < len(mlist):
            d = done[k]
            if d < len(gens):
                x = mlist[k]
                for gi in range(d, len(gens)):
                    y = mul(x, gens[gi])
                    if y not in member_set:
                        member_set.add(y)
                        mlist.append(y)
                        done.append(0)
                done[k] = len(gens)
            k += 1

    def sorted_members(self):
        return tuple(sorted(self.member_set))


def subgroup_closure(G, seeds):
    """Members of <seeds> as a sorted tuple of indices (deterministic)."""
    cb = ClosureBuilder(G)
    for s in seeds:
        cb.add(s)
    return cb.sorted_members()


def subgroup_generated(G, seeds, normal=None):
    seeds = tuple(dict.fromkeys(s for s in seeds if s != 0))
    return Subgroup(G, subgroup_closure(G, seeds), normal=normal, gens=seeds)


def greedy_generators(G, members):
    """Small generating set for a known subgroup, chosen deterministically."""
    if len(members) == 1:
        return ()
    cb = ClosureBuilder(G)
    for x in members:
        cb.add(x)
        if len(cb.member_set) == len(members):
            break
    return tuple(cb.gens)


def greedy_generators_from(G):
    """Generating indices for a group whose constructor supplied none."""
    cb = ClosureBuilder(G)
    for x in range(G.order):
        cb.add(x)
        if len(cb.member_set) == G.order:
            break
    return tuple(cb.gens)


def normal_closure(G, seed):
    """Smallest normal subgroup of G containing the seed indices."""
    cb = ClosureBuilder(G)
    for s in seed:
        cb.add(s)
    # conjugation-stabilize: conjugating the adopted generators by the
    # parent's generators suffices, and each adoption doubles the closure
    while True:
        grew = False
        for g in G.generators:
            for x in list(cb.gens):
                if cb.add(G.conj(x, g)):
                    grew = True
        if not grew:
            return Subgroup(G, cb.sorted_members(), normal=True,
                            gens=tuple(cb.gens))


# -- conjugacy, commutators, centers ------------------------------------------


def conjugacy_classes(G):
    """Partition of indices into conjugacy classes.

    Identity class first, then sorted by (size, least member).
    """
    classes = G._cache.get("classes")
    if classes is None:
        n = G.order
        seen = [False] * n
        out = []
        pairs = [(g, G.inv(g)) for g in G.generators]
        for i in range(n):
            if seen[i]:
                continue
            orbit = [i]
            seen[i] = True
            k = 0
            while k < len(orbit):
                x = orbit[k]
                k += 1
                for g, gi in pairs:
                    y = G.mul(gi, G.mul(x, g))
                    if not seen[y]:
                        seen[y] = True
                        orbit.append(y)
            out.append(tuple(sorted(orbit)))
        out.sort(key=lambda c: (len(c), c[0]))
        classes = tuple(out)
        G._cache["classes"] = classes
    return classes


def class_index_of(G):
    """Array mapping element index -> conjugacy class position."""
    arr = G._cache.get("class_of")
    if arr is None:
        arr = [0] * G.order
        for ci, cls in enumerate(conjugacy_classes(G)):
            for x in cls:
                arr[x] = ci
        G._cache["class_of"] = arr
    return arr


def commutator_subgroup(G):
    """Normal closure of the commutators of the generators."""
    sub = G._cache.get("derived")
    if sub is None:
        gens = G.generators if G.generators else ()
        comms = []
        for x in gens:
            xi = G.inv(x)
            for y in gens:
                c = G.mul(G.mul(xi, G.inv(y)), G.mul(x, y))
                if c != 0:
                    comms.append(c)
        sub = normal_closure(G, comms) if comms else trivial_subgroup(G)
        G._cache["derived"] = sub
    return sub


def center(G):
    gens = G.generators
    members = [x for x in range(G.order)
               if all(G.mul(x, g) == G.mul(g, x) for g in gens)]
    return Subgroup(G, members, normal=True)


def is_abelian(G):
    flag = G._cache.get("abelian")
    if flag is None:
        gens = G.generators
        flag = all(G.mul(a, b) == G.mul(b, a)
                   for a in gens for b in gens)
        G._cache["abelian"] = flag
    return flag


def subgroup_is_abelian(H):
    G = H.parent
    gens = H.gens()
    return all(G.mul(a, b) == G.mul(b, a) for a in gens for b in gens)


# -- homomorphisms -------------------------------------------------------------


class Homomorphism:
    """Total map between element indices of two groups."""

    def __init__(self, source, target, mapping):
        self.source = source
        self.target = target
        self.mapping = tuple(mapping)

    def __call__(self, i):
        return self.mapping[i]

    def image(self):
        return sorted(set(self.mapping))

    def image_subgroup(self):
        return Subgroup(self.target, set(self.mapping))

    def is_surjective(self):
        return len(set(self.mapping)) == self.target.order

    def kernel(self):
        members = [i for i, t in enumerate(self.mapping) if t == 0]
        return Subgroup(self.source, members, normal=True)

    def preimage(self, sub):
        assert sub.parent is self.target
        members = [i for i, t in enumerate(self.mapping) if t in sub.member_set]
        normal = True if sub.normal else None
        return Subgroup(self.source, members, normal=normal)

    def compose(self, other):
        """self after other: other.source -> self.target."""
        assert other.target is self.source
        return Homomorphism(other.source, self.target,
                            [self.mapping[t] for t in other.mapping])

    def validate(self, exhaustive_order=EXHAUSTIVE_ORDER,
                 samples=SAMPLE_COUNT, seed=SAMPLE_SEED):
        """Check the homomorphism property per the sampling policy; True/False.

        Exhaustive over all pairs when the source order allows it, else on
        fixed-seed random pairs plus all generator pairs.
        """
        G, H, m = self.source, self.target, self.mapping
        if m[0] != 0:
            return False
        n = G.order
        if n <= exhaustive_order:
            pairs = ((i, j) for i in range(n) for j in range(n))
        else:
            rng = random.Random(seed)
            fixed = [(a, b) for a in G.generators for b in G.generators]
            pairs = itertools.chain(
                fixed, ((rng.randrange(n), rng.randrange(n))
                        for _ in range(samples)))
        return all(m[G.mul(i, j)] == H.mul(m[i], m[j]) for i, j in pairs)


def hom_from_map(source, target, mapping, validate=True):
    h = Homomorphism(source, target, mapping)
    if validate and not h.validate():
        raise ValueError("mapping is not a homomorphism")
    return h


def identity_hom(G):
    return Homomorphism(G, G, range(G.order))


# -- group actions --------------------------------------------------------------


class GroupAction:
    """Right action of `actor` on the group `space` by automorphisms.

    apply(space_index, actor_index) -> space_index.
    """

    def __init__(self, actor, space, apply):
        self.actor = actor
        self.space = space
        self.apply = apply

    def is_trivial(self):
        return all(self.apply(a, g) == a
                   for g in self.actor.generators
                   for a in range(self.space.order))

    def validate(self, exhaustive_order=EXHAUSTIVE_ORDER,
                 samples=SAMPLE_COUNT, seed=SAMPLE_SEED):
        """Raise NotAnAction / NotAutomorphisms on a violated law."""
        A, H, app = self.space, self.actor, self.apply
        for a in range(A.order):
            if app(a, 0) != a:
                raise NotAnAction("identity of the actor must act trivially")
        n = A.order * H.order * H.order
        if n <= exhaustive_order ** 2:
            triples = ((a, g, h) for a in range(A.order)
                       for g in range(H.order) for h in range(H.order))
        else:
            rng = random.Random(seed)
            triples = ((rng.randrange(A.order), rng.randrange(H.order),
                        rng.randrange(H.order)) for _ in range(samples))
        for a, g, h in triples:
            if app(a, H.mul(g, h)) != app(app(a, g), h):
                raise NotAnAction("a^(gh) != (a^g)^h")
        n = A.order * A.order * H.order
        if n <= exhaustive_order ** 2:
            triples = ((a, b, g) for a in range(A.order)
                       for b in range(A.order) for g in range(H.order))
        else:
            rng = random.Random(seed + 1)
            triples = ((rng.randrange(A.order), rng.randrange(A.order),
                        rng.randrange(H.order)) for _ in range(samples))
        for a, b, g in triples:
            if app(A.mul(a, b), g) != A.mul(app(a, g), app(b, g)):
                raise NotAutomorphisms("(ab)^g != a^g b^g")
        return True


def trivial_action(actor, space):
    return GroupAction(actor, space, lambda a, g: a)


# -- product constructions -------------------------------------------------------


def direct_product_many(factors, name=None, closure_cap=CLOSURE_CAP):
    """Direct product with tuple values; factors and embeddings retained."""
    total = 1
    for f in factors:
        total *= f.order
    if total > closure_cap:
        raise CapExceeded(f"product order {total} exceeds cap {closure_cap}")
    muls = [f.mul for f in factors]
    invs = [f.inv for f in factors]

    def vmul(a, b):
        return tuple(m(x, y) for m, x, y in zip(muls, a, b))

    def vinv(a):
        return tuple(m(x) for m, x in zip(invs, a))

    def labeler(a):
        return "(" + ", ".join(f.label(x) for f, x in zip(factors, a)) + ")"

    values = itertools.product(*[range(f.order) for f in factors])
    gens = []
    for k, f in enumerate(factors):
        for g in f.generators:
            t = [0] * len(factors)
            t[k] = g
            gens.append(tuple(t))
    if name is None:
        name = " x ".join(f.name for f in factors)
    P = Group(values, vmul, vinv, labeler, name=name, kind="product")
    P.generators = tuple(P.index_of(t) for t in gens)
    P.factors = tuple(factors)
    return P


def direct_product(G, H, closure_cap=CLOSURE_CAP):
    return direct_product_many([G, H], closure_cap=closure_cap)


def product_embedding(P, k):
    """Canonical embedding of factor k into the product P."""
    factors = P.factors
    f = factors[k]
    mapping = []
    for x in range(f.order):
        t = [0] * len(factors)
        t[k] = x
        mapping.append(P.index_of(tuple(t)))
    return Homomorphism(f, P, mapping)


def product_projection(P, k):
    factors = P.factors
    f = factors[k]
    return Homomorphism(P, f, [P.value(i)[k] for i in range(P.order)])


def semidirect_product(N, H, act, name=None, validate=True,
                       closure_cap=CLOSURE_CAP):
    """N x| H for a right action of H on N by automorphisms.

    Multiplication (n1,h1)(n2,h2) = (n1^h2 * n2, h1 h2); the same convention
    is reused verbatim by the twisted wreath construction.
    """
    if act.actor is not H or act.space is not N:
        raise NotAnAction("action must have actor H and space N")
    if validate:
        act.validate()
    total = N.order * H.order
    if total > closure_cap:
        raise CapExceeded(f"semidirect order {total} exceeds cap {closure_cap}")
    app = act.apply

    def vmul(a, b):
        return (N.mul(app(a[0], b[1]), b[0]), H.mul(a[1], b[1]))

    def vinv(a):
        hi = H.inv(a[1])
        return (app(N.inv(a[0]), hi), hi)

    def labeler(a):
        return f"({N.label(a[0])}; {H.label(a[1])})"

    values = itertools.product(range(N.order), range(H.order))
    if name is None:
        name = f"{N.name} x| {H.name}"
    W = Group(values, vmul, vinv, labeler, name=name, kind="semidirect")
    gens = [(g, 0) for g in N.generators] + [(0, g) for g in H.generators]
    W.generators = tuple(W.index_of(v) for v in gens)
    W.factors = (N, H)
    return W


def quotient(G, N, name=None):
    """Quotient group and the canonical surjection; requires N normal."""
    if not isinstance(N, Subgroup) or N.parent is not G:
        raise NotNormal("quotient needs a Subgroup of G")
    N.require_normal()
    key = ("quotient", N.member_set)
    cached = G._cache.get(key)
    if cached is not None:
        return cached
    n = G.order
    rep_of = [-1] * n
    reps = []
    for i in range(n):
        if rep_of[i] == -1:
            reps.append(i)
            for t in N.members:
                rep_of[G.mul(i, t)] = i
    pos = {r: k for k, r in enumerate(reps)}

    def vmul(a, b):
        return rep_of[G.mul(a, b)]

    def vinv(a):
        return rep_of[G.inv(a)]

    def labeler(a):
        return f"[{G.label(a)}]"

    if name is None:
        name = f"{G.name}/N{N.order}"
    Q = Group(reps, vmul, vinv, labeler, name=name, kind="quotient")
    Q.generators = tuple(dict.fromkeys(
        pos[rep_of[g]] for g in G.generators if rep_of[g] != 0))
    hom = Homomorphism(G, Q, [pos[rep_of[i]] for i in range(n)])
    G._cache[key] = (Q, hom)
    return Q, hom


def fiber_product(alpha, beta, closure_cap=CLOSURE_CAP):
    """Subgroup {(g,h) : alpha(g) = beta(h)} of G x H for surjections onto K."""
    if alpha.target is not beta.target:
        raise NotSurjective("alpha and beta must land in the same group")
    if not alpha.is_surjective() or not beta.is_surjective():
        raise NotSurjective("fiber product needs surjective maps")
    G, H, K = alpha.source, beta.source, alpha.target
    total = G.order * H.order // K.order
    if total > closure_cap:
        raise CapExceeded(f"fiber product order {total} exceeds cap")
    am, bm = alpha.mapping, beta.mapping
    values = [(i, j) for i in range(G.order) for j in range(H.order)
              if am[i] == bm[j]]
    assert len(values) == total

    def vmul(a, b):
        return (G.mul(a[0], b[0]), H.mul(a[1], b[1]))

    def vinv(a):
        return (G.inv(a[0]), H.inv(a[1]))

    def labeler(a):
        return f"({G.label(a[0])}, {H.label(a[1])})"

    P = Group(values, vmul, vinv, labeler,
              name=f"{G.name} xK {H.name}", kind="fiber")
    P.factors = (G, H)
    return P


# -- permutation groups ------------------------------------------------------------


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def perm_from_cycles(degree, text):
    """Permutation tuple (0-based images) from 1-based cycle notation."""
    if isinstance(text, (tuple, list)):
        cycles = [tuple(c) for c in text]
        stripped = ""
    else:
        stripped = text.strip()
        if stripped in ("()", "1", ""):
            return tuple(range(degree))
        body = _CYCLE_RE.sub("", stripped)
        if body.strip():
            raise MalformedCycle(f"unexpected text in cycle word: {text!r}")
        cycles = []
        for grp in _CYCLE_RE.findall(stripped):
            pts = grp.replace(",", " ").split()
            if not pts:
                continue
            try:
                cycles.append(tuple(int(p) for p in pts))
            except ValueError:
                raise MalformedCycle(f"non-integer point in {text!r}") from None
    images = list(range(degree))
    seen = set()
    for cyc in cycles:
        for p in cyc:
            if not 1 <= p <= degree:
                raise MalformedCycle(f"point {p} outside 1..{degree}")
            if p in seen:
                raise MalformedCycle(f"point {p} repeated in {text!r}")
            seen.add(p)
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            images[a - 1] = b - 1
    return tuple(images)


def cycle_label(perm):
    """Canonical cycle notation, 1-based, fixpoints omitted, () for identity."""
    n = len(perm)
    seen = [False] * n
    cycles = []
    for i in range(n):
        if seen[i] or perm[i] == i:
            seen[i] = True
            continue
        cyc = [i]
        seen[i] = True
        j = perm[i]
        while j != i:
            cyc.append(j)
            seen[j] = True
            j = perm[j]
        cycles.append(cyc)
    if not cycles:
        return "()"
    cycles.sort(key=lambda c: c[0])
    return "".join("(" + " ".join(str(p + 1) for p in c) + ")" for c in cycles)


def perm_mul(p, q):
    return tuple(q[x] for x in p)


def perm_inv(p):
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def group_from_perm_generators(degree, generators, name=None,
                               closure_cap=CLOSURE_CAP, dense_cap=DENSE_CAP):
    """Permutation group generated by cycle words on {1..degree}."""
    if degree < 1:
        raise MalformedCycle("degree must be positive")
    gen_values = [perm_from_cycles(degree, g) for g in generators]
    if name is None:
        name = "perm(" + "; ".join(cycle_label(g) for g in gen_values) + ")"
    G = generate_group(tuple(range(degree)), gen_values, perm_mul, perm_inv,
                       cycle_label, name, closure_cap=closure_cap,
                       dense_cap=dense_cap, kind="perm")
    G.degree = degree
    return G


# -- validation and isomorphism -----------------------------------------------------


def check_group_axioms(G, exhaustive_order=EXHAUSTIVE_ORDER,
                       samples=SAMPLE_COUNT, seed=SAMPLE_SEED):
    """Closure, identity, inverse, associativity, generation.

    Associativity is exhaustive up to `exhaustive_order`, sampled beyond.
    Returns a list of problem strings; empty means all checks passed.
    """
    problems = []
    n = G.order
    for i in range(n):
        if G.mul(0, i) != i or G.mul(i, 0) != i:
            problems.append(f"identity law fails at {i}")
        if G.mul(i, G.inv(i)) != 0 or G.mul(G.inv(i), i) != 0:
            problems.append(f"inverse law fails at {i}")
    if n <= exhaustive_order:
        triples = ((i, j, k) for i in range(n) for j in range(n)
                   for k in range(n))
    else:
        rng = random.Random(seed)
        triples = ((rng.randrange(n), rng.randrange(n), rng.randrange(n))
                   for _ in range(samples))
    for i, j, k in triples:
        if G.mul(G.mul(i, j), k) != G.mul(i, G.mul(j, k)):
            problems.append(f"associativity fails at ({i},{j},{k})")
            break
    if len(subgroup_closure(G, G.generators)) != n:
        problems.append("generators do not generate the group")
    return problems


def find_isomorphism(G, H, cap=200):
    """Backtracking generator-image search; None if no isomorphism is found.

    Adequate for order <= cap; used by tests and small structure checks only.
    """
    if G.order != H.order:
        return None
    if G.order > cap:
        raise CapExceeded(f"isomorphism search capped at order {cap}")
    if sorted(len(c) for c in conjugacy_classes(G)) != \
            sorted(len(c) for c in conjugacy_classes(H)):
        return None
    g_orders = sorted(G.element_order(i) for i in range(G.order))
    h_orders = sorted(H.element_order(i) for i in range(H.order))
    if g_orders != h_orders:
        return None
    gens = G.generators if G.generators else ()
    if not gens:
        return Homomorphism(G, H, [0])
    candidates = [
        [x for x in range(H.order) if H.element_order(x) == G.element_order(g)]
        for g in gens]

    def extend(images):
        k = len(images)
        if k == len(gens):
            return _gen_image_hom(G, H, gens, images)
        for x in candidates[k]:
            h = extend(images + [x])
            if h is not None:
                return h
        return None

    return extend([])


def _gen_image_hom(G, H, gens, images):
    """Extend a generator assignment along the Cayley graph; None on conflict."""
    mapping = [None] * G.order
    mapping[0] = 0
    queue = [0]
    k = 0
    gi = list(zip(gens, images))
    while k < len(queue):
        x = queue[k]
        k += 1
        for g, img in gi:
            y = G.mul(x, g)
            fy = H.mul(mapping[x], img)
            if mapping[y] is None:
                mapping[y] = fy
                queue.append(y)
            elif mapping[y] != fy:
                return None
    if len(queue) != G.order or len(set(mapping)) != G.order:
        return None
    return Homomorphism(G, H, mapping)


def is_isomorphic(G, H, cap=200):
    return find_isomorphism(G, H, cap=cap) is not None
