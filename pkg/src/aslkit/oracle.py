"""Brute-force reference implementations used only for cross-validation.

These deliberately use a different algorithm family from the main path:
normal subgroups are found by exhaustive enumeration of identity-containing
unions of conjugacy classes (with infeasible branches pruned through a
class-product table), never by element-level closure of seeds. Agreement with
the join-closure lattice is therefore meaningful evidence. Performance is a
non-goal; the enumeration is exponential in the class count.
"""

from __future__ import annotations

from .core import Subgroup, class_index_of, conjugacy_classes, quotient, is_abelian
from .errors import TooManyClasses
from .normal import is_simple

ORACLE_CLASS_CAP = 16


def _class_product_masks(G):
    """masks[i][j] = bitmask of classes hit by products x*y, x in c_i, y in c_j.

    One representative of c_i suffices on the left: the hit set of c_i * c_j
    is conjugation invariant.
    """
    classes = conjugacy_classes(G)
    cls_of = class_index_of(G)
    c = len(classes)
    masks = [[0] * c for _ in range(c)]
    for i in range(c):
        xi = classes[i][0]
        for j in range(c):
            m = 0
            for y in classes[j]:
                m |= 1 << cls_of[G.mul(xi, y)]
            masks[i][j] = m
    return masks


def _closed_class_masks(G, max_classes):
    classes = conjugacy_classes(G)
    c = len(classes)
    if c > max_classes:
        raise TooManyClasses(
            f"{G.name}: {c} conjugacy classes exceed oracle cap {max_classes}")
    masks = _class_product_masks(G)

    def class_closure(mask):
        """Smallest multiplication-closed class set containing mask."""
        while True:
            new = mask
            rest_i, i = mask, 0
            while rest_i:
                if rest_i & 1:
                    row = masks[i]
                    rest_j, j = mask, 0
                    while rest_j:
                        if rest_j & 1:
                            new |= row[j]
                        rest_j >>= 1
                        j += 1
                rest_i >>= 1
                i += 1
            if new == mask:
                return mask
            mask = new

    out = []

    def extend(k, closed, excluded):
        # closed: class-closure of everything included so far
        if k == c:
            out.append(closed)
            return
        bit = 1 << k
        if closed & bit:
            extend(k + 1, closed, excluded)
            return
        grown = class_closure(closed | bit)
        if not grown & excluded:
            extend(k + 1, grown, excluded)
        extend(k + 1, closed, excluded | bit)

    extend(1, 1, 0)
    return sorted(out)


def oracle_normal_subgroups(G, max_classes=ORACLE_CLASS_CAP):
    """All normal subgroups, by exhaustive class-subset enumeration."""
    classes = conjugacy_classes(G)
    subs = []
    for mask in _closed_class_masks(G, max_classes):
        members = []
        i = 0
        m = mask
        while m:
            if m & 1:
                members.extend(classes[i])
            m >>= 1
            i += 1
        subs.append(Subgroup(G, members, normal=True))
    subs.sort(key=lambda s: (s.order, s.members))
    return subs


def oracle_D(G, max_classes=ORACLE_CLASS_CAP):
    """Definition-direct generalized derived subgroup.

    Builds every quotient explicitly and intersects exactly the kernels whose
    quotient is abelian or simple.
    """
    inter = frozenset(range(G.order))
    for N in oracle_normal_subgroups(G, max_classes=max_classes):
        Q, _ = quotient(G, N)
        if Q.order == 1 or is_abelian(Q) or is_simple(Q):
            inter = inter & N.member_set
    return Subgroup(G, inter, normal=True)


def oracle_length(G, max_classes=ORACLE_CLASS_CAP):
    """Iterate oracle_D down to the identity, counting steps."""
    cur = G
    steps = 0
    while cur.order > 1:
        d = oracle_D(cur, max_classes=max_classes)
        if d.order == cur.order:
            raise AssertionError("oracle series stalled")
        steps += 1
        if d.order == 1:
            break
        cur = d.as_group()
    return steps
