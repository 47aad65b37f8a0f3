"""Mini-language parsing, unparse stability, label resolution."""

import pytest

from aslkit.errors import GroupSpecError, MalformedCycle, UnknownConstructor
from aslkit.specparse import (
    evaluate,
    group_from_spec,
    parse_group_spec,
    resolve_label,
    unparse,
)


CASES = [
    ("S4", 24),
    ("A5", 60),
    ("C1", 1),
    ("C32", 32),
    ("D16", 32),
    ("Q8", 8),
    ("D2", 4),
    ("perm(5; (1 2 3 4 5), (1 2))", 120),
    ("perm(4; (1 2)(3 4), (1 3)(2 4))", 4),
    ("C2 x A5", 120),
    ("S3 x C2 x C2", 24),
    ("(C2 x C2) x C3", 12),
    ("GL(2,2)", 6),
    ("SL(2,5)", 120),
    ("U(3,3)", 27),
    ("GLZ(2,3,2)", 3888),
    ("mat(F2; [[0, 1], [1, 1]])", 3),
    ("mat(Z4; [[1, 1], [0, 1]])", 4),
    ("S4 / normal-closure-of((1 2)(3 4))", 6),
    ("S4 / normal-closure-of((1 2 3))", 2),
    ("C6 / normal-closure-of(2)", 2),
]


@pytest.mark.parametrize("text,order", CASES)
def test_parse_evaluate(text, order):
    g = group_from_spec(text)
    assert g.order == order


@pytest.mark.parametrize("text,order", CASES)
def test_unparse_idempotent(text, order):
    once = unparse(parse_group_spec(text))
    twice = unparse(parse_group_spec(once))
    assert once == twice


def test_unparse_normalizes_whitespace():
    assert unparse(parse_group_spec("C2   x   A5")) == "C2 x A5"
    assert unparse(parse_group_spec("perm(3;(1 2 3))")) == "perm(3; (1 2 3))"


def test_parse_errors_carry_position():
    with pytest.raises(GroupSpecError) as err:
        parse_group_spec("S4 )")
    assert err.value.column == 4
    with pytest.raises(UnknownConstructor):
        parse_group_spec("B7")
    with pytest.raises(GroupSpecError):
        parse_group_spec("GL(2)")
    with pytest.raises(MalformedCycle):
        evaluate(parse_group_spec("perm(3; (1 2 2))"))


def test_quotient_label_resolution():
    s4 = group_from_spec("S4")
    assert s4.label(resolve_label(s4, "(2 1)")) == "(1 2)"
    c6 = group_from_spec("C6")
    assert resolve_label(c6, "4") == 4
    with pytest.raises(GroupSpecError):
        resolve_label(s4, "(1 9)")


def test_quotient_spec_by_labels():
    q = group_from_spec("Q8 / normal-closure-of(-1)")
    assert q.order == 4
    # the chosen matrix is I + 2*[[1,1],[1,1]]; its normal closure has order 8
    g = group_from_spec("GLZ(2,2,2) / normal-closure-of([[3, 2], [2, 3]])")
    assert g.order == 12


DOC_EXAMPLES = [
    "S4",
    "S3",
    "C2 x A5",
    "C6 x A5",
    "GL(2,2)",
    "perm(5; (1 2 3 4 5), (1 2))",
    "S4 / normal-closure-of((1 2)(3 4))",
]


def test_readme_examples_roundtrip():
    """Every example spec shown in the README parses, evaluates, and
    unparses stably."""
    from pathlib import Path
    readme = Path(__file__).resolve().parent.parent / "README.md"
    text = readme.read_text()
    for spec in DOC_EXAMPLES:
        assert spec in text, f"{spec!r} missing from README"
        node = parse_group_spec(spec)
        assert evaluate(node).order >= 1
        assert unparse(parse_group_spec(unparse(node))) == unparse(node)
