import re

import pytest
from hypothesis import given, settings, strategies as st

from ringlab.errors import CapacityError, ParseError
from ringlab.expr import (
    C, GR, GProd, Corner, Mat, Prod, Quot, Tri, TrivExt, Zn, build, canonical, evaluate, parse_ring_expr, render,
)


def test_spec_examples():
    assert parse_ring_expr("T(2, Z2)") == Tri(2, Zn(2))
    assert parse_ring_expr("GR(Z2, C3)") == GR(Zn(2), C(3))
    assert parse_ring_expr("Z2 x Z3 x Z2") == Prod(Zn(2), Prod(Zn(3), Zn(2)))


def test_all_node_kinds():
    node = parse_ring_expr("Corner(Quot(TrivExt(M(2,Z2)),J),3)")
    assert node == Corner(Quot(TrivExt(Mat(2, Zn(2)))), 3)
    assert parse_ring_expr("GR(Z3,C2*C2*C3)").group == GProd(C(2), GProd(C(2), C(3)))


@pytest.mark.parametrize("text,reason,expected", [
    ("Q5", "unknown-atom", "Z"),
    ("Y", "unknown-atom", "M("),
    ("Z4294967296", "integer-overflow", "<int>"),
    ("M(2,Z2", "syntax", ")"),
    ("GR(Z2,Z3)", "syntax", "C"),
])
def test_error_reasons_and_expected_sets(text, reason, expected):
    with pytest.raises(ParseError) as info:
        parse_ring_expr(text)
    assert info.value.reason == reason
    assert expected in info.value.expected


def test_offsets_are_bytes():
    with pytest.raises(ParseError) as info:
        parse_ring_expr("Z2xé")
    assert info.value.position == 3
    with pytest.raises(ParseError) as info:
        parse_ring_expr("é")
    assert info.value.position == 0


def test_evaluate_flattens_products():
    R = build("Z2xZ2xZ2")
    assert R.order == 8 and R.label(5) == "(1,0,1)"
    assert R.provenance == "Z2xZ2xZ2"


def test_evaluate_respects_cap():
    with pytest.raises(CapacityError):
        build("GR(Z4,C8)")
    assert build("GR(Z2,C8)").order == 256


def test_canonical():
    assert canonical(" T ( 2 , Z2 ) x  Z3") == "T(2,Z2)xZ3"


leaf = st.builds(Zn, st.integers(2, 9))
groups = st.recursive(st.builds(C, st.integers(1, 6)), lambda g: st.builds(GProd, g, g), max_leaves=3)
trees = st.recursive(
    leaf,
    lambda t: st.one_of(
        st.builds(Mat, st.integers(1, 3), t), st.builds(Tri, st.integers(1, 3), t), st.builds(Prod, t, t),
        st.builds(GR, t, groups), st.builds(TrivExt, t), st.builds(Quot, t), st.builds(Corner, t, st.integers(0, 99)),
    ),
    max_leaves=5,
)


def _normalise(node):
    """Right-nest product chains (the parser's associativity)."""
    from ringlab.expr import _flatten

    if isinstance(node, Prod):
        parts = [_normalise(p) for p in _flatten(node, Prod)]
        out = parts[-1]
        for p in reversed(parts[:-1]):
            out = Prod(p, out)
        return out
    if isinstance(node, (Mat, Tri)):
        return type(node)(node.k, _normalise(node.ring))
    if isinstance(node, GR):
        return GR(_normalise(node.ring), _normalise_group(node.group))
    if isinstance(node, (TrivExt, Quot)):
        return type(node)(_normalise(node.ring))
    if isinstance(node, Corner):
        return Corner(_normalise(node.ring), node.e)
    return node


def _normalise_group(g):
    from ringlab.expr import _flatten

    parts = _flatten(g, GProd)
    out = parts[-1]
    for p in reversed(parts[:-1]):
        out = GProd(p, out)
    return out


@settings(max_examples=300, deadline=None)
@given(trees)
def test_round_trip(node):
    text = render(node)
    parsed = parse_ring_expr(text)
    assert parsed == _normalise(node)
    assert render(parsed) == text


@settings(max_examples=200, deadline=None)
@given(trees, st.sampled_from([" ", "\t", "  \n"]))
def test_whitespace_insensitive(node, pad):
    text = render(node)
    # pad between tokens; integers and keywords stay contiguous
    spaced = re.sub(r"([(),*]|x(?=[ZMTGQC]))", lambda m: pad + m.group(1) + pad, text)
    assert parse_ring_expr(spaced) == parse_ring_expr(text)


@settings(max_examples=200, deadline=None)
@given(st.text(max_size=20))
def test_garbage_never_crashes(text):
    try:
        parse_ring_expr(text)
    except ParseError as exc:
        assert 0 <= exc.position <= len(text.encode("utf-8"))
