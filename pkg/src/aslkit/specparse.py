"""Parser and evaluator for the group-spec mini-language.

Grammar (EBNF, also documented in the README):

    spec     = product , [ "/" , closure ] ;
    product  = atom , { "x" , atom } ;
    atom     = named | permgrp | matgrp | "(" , spec , ")" ;
    named    = ( "C" | "D" | "S" | "A" ) , integer
             | "Q8"
             | "GL" , "(" , integer , "," , integer , ")"
             | "SL" , "(" , integer , "," , integer , ")"
             | "U"  , "(" , integer , "," , integer , ")"
             | "GLZ" , "(" , integer , "," , integer , "," , integer , ")" ;
    permgrp  = "perm" , "(" , integer , ";" , cycles , { "," , cycles } , ")" ;
    cycles   = { "(" , integer , { integer } , ")" } ;
    matgrp   = "mat" , "(" , ring , ";" , matrix , { "," , matrix } , ")" ;
    ring     = ( "F" | "Z" ) , integer ;
    matrix   = "[" , row , { "," , row } , "]" ;
    row      = "[" , integer , { "," , integer } , "]" ;
    closure  = "normal-closure-of" , "(" , label , { "," , label } , ")" ;

A label is a raw element label of the base group (commas split only at the
top parenthesis level). One normalization pass makes unparse(parse(s))
idempotent.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .core import (
    CLOSURE_CAP,
    DENSE_CAP,
    direct_product_many,
    group_from_perm_generators,
    normal_closure,
    perm_from_cycles,
    cycle_label,
    quotient,
)
from .errors import GroupSpecError, MalformedCycle, UnknownConstructor
from .families import (
    alternating_group,
    cyclic_group,
    dihedral_group,
    quaternion_group,
    symmetric_group,
)
from .matgroups import (
    MatrixGroupSpec,
    PrimePowerField,
    ResidueRing,
    _factor,
    gl_group,
    glz_group,
    mat_label,
    matrix_group,
    sl_group,
    unitriangular_group,
)


@dataclass(frozen=True)
class Named:
    name: str
    args: tuple


@dataclass(frozen=True)
class PermSpec:
    degree: int
    cycles: tuple  # normalized cycle words, one per generator


@dataclass(frozen=True)
class MatSpec:
    ring: str
    matrices: tuple  # tuples of row tuples


@dataclass(frozen=True)
class ProdSpec:
    factors: tuple


@dataclass(frozen=True)
class QuotSpec:
    base: object
    labels: tuple


class _Cursor:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def _linecol(self, pos=None):
        pos = self.pos if pos is None else pos
        line = self.text.count("\n", 0, pos) + 1
        col = pos - (self.text.rfind("\n", 0, pos) + 1) + 1
        return line, col

    def error(self, message, pos=None):
        line, col = self._linecol(pos)
        raise GroupSpecError(message, line, col)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def eat(self, ch):
        self.skip_ws()
        if not self.text.startswith(ch, self.pos):
            self.error(f"expected {ch!r}")
        self.pos += len(ch)

    def try_eat(self, ch):
        self.skip_ws()
        if self.text.startswith(ch, self.pos):
            self.pos += len(ch)
            return True
        return False

    def name(self):
        self.skip_ws()
        m = re.match(r"[A-Za-z][A-Za-z0-9-]*", self.text[self.pos:])
        if not m:
            self.error("expected a name")
        self.pos += m.end()
        return m.group(0)

    def integer(self):
        self.skip_ws()
        m = re.match(r"\d+", self.text[self.pos:])
        if not m:
            self.error("expected an integer")
        self.pos += m.end()
        return int(m.group(0))

    def at_end(self):
        self.skip_ws()
        return self.pos >= len(self.text)


_NAMED_RE = re.compile(r"^([A-Za-z]+?)(\d+)$")


def parse_group_spec(text):
    """Parse a group spec; raises GroupSpecError with line/column on failure."""
    cur = _Cursor(text)
    node = _parse_spec(cur)
    if not cur.at_end():
        cur.error("trailing input after group spec")
    return node


def _parse_spec(cur):
    node = _parse_product(cur)
    if cur.try_eat("/"):
        cur.skip_ws()
        kw = cur.name()
        if kw != "normal-closure-of":
            cur.error("expected 'normal-closure-of' after '/'")
        cur.eat("(")
        labels = _parse_raw_labels(cur)
        return QuotSpec(node, tuple(labels))
    return node


def _parse_raw_labels(cur):
    """Raw label chunks up to the matching ')', split on top-level commas."""
    labels = []
    depth = 0
    buf = []
    while True:
        if cur.pos >= len(cur.text):
            cur.error("unterminated normal-closure-of(...)")
        ch = cur.text[cur.pos]
        cur.pos += 1
        if ch in "([":
            depth += 1
        elif ch == "]":
            depth -= 1
        elif ch == ")":
            if depth == 0:
                break
            depth -= 1
        if ch == "," and depth == 0:
            labels.append("".join(buf).strip())
            buf = []
        else:
            buf.append(ch)
    tail = "".join(buf).strip()
    if tail:
        labels.append(tail)
    if not labels:
        cur.error("normal-closure-of needs at least one element label")
    return labels


def _parse_product(cur):
    factors = [_parse_atom(cur)]
    while True:
        save = cur.pos
        cur.skip_ws()
        if cur.text.startswith("x", cur.pos) and not re.match(
                r"[A-Za-z0-9]", cur.text[cur.pos + 1:cur.pos + 2] or ""):
            cur.pos += 1
            factors.append(_parse_atom(cur))
        else:
            cur.pos = save
            break
    if len(factors) == 1:
        return factors[0]
    return ProdSpec(tuple(factors))


def _parse_atom(cur):
    if cur.try_eat("("):
        node = _parse_spec(cur)
        cur.eat(")")
        return node
    start = cur.pos
    name = cur.name()
    if name == "perm":
        return _parse_perm(cur)
    if name == "mat":
        return _parse_mat(cur)
    if name in ("GL", "SL", "U", "GLZ"):
        cur.eat("(")
        args = [cur.integer()]
        while cur.try_eat(","):
            args.append(cur.integer())
        cur.eat(")")
        want = 3 if name == "GLZ" else 2
        if len(args) != want:
            cur.error(f"{name} takes {want} arguments", pos=start)
        return Named(name, tuple(args))
    m = _NAMED_RE.match(name)
    if m and m.group(1) in ("C", "D", "S", "A", "Q"):
        letter, num = m.group(1), int(m.group(2))
        if letter == "Q" and num != 8:
            raise UnknownConstructor(f"unknown constructor {name!r}")
        return Named(letter, (num,))
    raise UnknownConstructor(f"unknown constructor {name!r}")


def _parse_perm(cur):
    cur.eat("(")
    degree = cur.integer()
    cur.eat(";")
    words = []
    while True:
        word = _parse_cycle_word(cur)
        words.append(word)
        if not cur.try_eat(","):
            break
    cur.eat(")")
    normalized = tuple(cycle_label(perm_from_cycles(degree, w))
                       for w in words)
    return PermSpec(degree, normalized)


def _parse_cycle_word(cur):
    parts = []
    while cur.peek() == "(":
        cur.eat("(")
        pts = [cur.integer()]
        while cur.peek().isdigit():
            pts.append(cur.integer())
        cur.eat(")")
        parts.append("(" + " ".join(str(p) for p in pts) + ")")
    if not parts:
        cur.error("expected a cycle word")
    return "".join(parts)


def _parse_mat(cur):
    cur.eat("(")
    ring = cur.name()
    if not re.match(r"^[FZ]\d+$", ring):
        cur.error(f"unknown ring {ring!r}; use F<q> or Z<m>")
    cur.eat(";")
    mats = [_parse_matrix(cur)]
    while cur.try_eat(","):
        mats.append(_parse_matrix(cur))
    cur.eat(")")
    return MatSpec(ring, tuple(mats))


def _parse_matrix(cur):
    cur.eat("[")
    rows = [_parse_row(cur)]
    while cur.try_eat(","):
        rows.append(_parse_row(cur))
    cur.eat("]")
    if any(len(r) != len(rows) for r in rows):
        cur.error("matrix must be square")
    return tuple(rows)


def _parse_row(cur):
    cur.eat("[")
    xs = [cur.integer()]
    while cur.try_eat(","):
        xs.append(cur.integer())
    cur.eat("]")
    return tuple(xs)


# -- unparse -----------------------------------------------------------------


def unparse(node):
    """Canonical text form; idempotent after one normalization pass."""
    if isinstance(node, Named):
        if node.name in ("C", "D", "S", "A"):
            return f"{node.name}{node.args[0]}"
        if node.name == "Q":
            return "Q8"
        return f"{node.name}({','.join(str(a) for a in node.args)})"
    if isinstance(node, PermSpec):
        return f"perm({node.degree}; " + ", ".join(node.cycles) + ")"
    if isinstance(node, MatSpec):
        return f"mat({node.ring}; " + ", ".join(
            mat_label(m) for m in node.matrices) + ")"
    if isinstance(node, ProdSpec):
        return " x ".join(
            f"({unparse(f)})" if isinstance(f, (ProdSpec, QuotSpec))
            else unparse(f) for f in node.factors)
    if isinstance(node, QuotSpec):
        base = unparse(node.base)
        if isinstance(node.base, QuotSpec):
            base = f"({base})"
        return f"{base} / normal-closure-of(" + ", ".join(node.labels) + ")"
    raise TypeError(f"not a spec node: {node!r}")


# -- evaluation ----------------------------------------------------------------


def resolve_label(G, label):
    """Element index for a label: exact match, else cycle normalization."""
    label = label.strip()
    try:
        return G.labels.index(label)
    except ValueError:
        pass
    if G.kind == "perm":
        try:
            value = perm_from_cycles(G.degree, label)
            return G.index_of(value)
        except (MalformedCycle, KeyError):
            pass
    if G.kind == "cyclic" and re.match(r"^\d+$", label):
        return int(label) % G.order
    raise GroupSpecError(f"no element labelled {label!r} in {G.name}")


def evaluate(node, closure_cap=CLOSURE_CAP, dense_cap=DENSE_CAP):
    """Build the Group a spec node denotes."""
    if isinstance(node, Named):
        return _eval_named(node, closure_cap, dense_cap)
    if isinstance(node, PermSpec):
        return group_from_perm_generators(
            node.degree, node.cycles, closure_cap=closure_cap,
            dense_cap=dense_cap,
            name=unparse(node))
    if isinstance(node, MatSpec):
        ring = _eval_ring(node.ring)
        n = len(node.matrices[0])
        spec = MatrixGroupSpec(n, ring, node.matrices)
        return matrix_group(spec, name=unparse(node),
                            closure_cap=closure_cap, dense_cap=dense_cap)
    if isinstance(node, ProdSpec):
        factors = [evaluate(f, closure_cap, dense_cap)
                   for f in node.factors]
        return direct_product_many(factors, closure_cap=closure_cap)
    if isinstance(node, QuotSpec):
        G = evaluate(node.base, closure_cap, dense_cap)
        seeds = [resolve_label(G, lab) for lab in node.labels]
        N = normal_closure(G, seeds)
        Q, _ = quotient(G, N, name=unparse(node))
        return Q
    raise TypeError(f"not a spec node: {node!r}")


def _eval_named(node, closure_cap, dense_cap):
    name, args = node.name, node.args
    if name == "C":
        return cyclic_group(args[0], closure_cap=closure_cap,
                            dense_cap=dense_cap)
    if name == "D":
        return dihedral_group(args[0], closure_cap=closure_cap,
                              dense_cap=dense_cap)
    if name == "S":
        return symmetric_group(args[0], closure_cap=closure_cap,
                               dense_cap=dense_cap)
    if name == "A":
        return alternating_group(args[0], closure_cap=closure_cap,
                                 dense_cap=dense_cap)
    if name == "Q":
        return quaternion_group()
    if name == "GL":
        return gl_group(*args, closure_cap=closure_cap, dense_cap=dense_cap)
    if name == "SL":
        return sl_group(*args, closure_cap=closure_cap, dense_cap=dense_cap)
    if name == "U":
        return unitriangular_group(*args, closure_cap=closure_cap,
                                   dense_cap=dense_cap)
    if name == "GLZ":
        return glz_group(*args, closure_cap=closure_cap, dense_cap=dense_cap)
    raise UnknownConstructor(f"unknown constructor {name!r}")


def _eval_ring(token):
    kind, size = token[0], int(token[1:])
    if kind == "F":
        return PrimePowerField(size)
    fac = _factor(size)
    if len(fac) != 1:
        raise UnknownConstructor(
            f"Z{size}: residue rings must have prime-power modulus")
    return ResidueRing(size)


def group_from_spec(text, closure_cap=CLOSURE_CAP, dense_cap=DENSE_CAP):
    return evaluate(parse_group_spec(text), closure_cap, dense_cap)
