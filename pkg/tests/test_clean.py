import numpy as np
import pytest

from ringlab.clean import (
    DIAGRAM,
    classify_ring,
    clean_counts,
    decompositions,
    element_clean_class,
    mod_radical_counts,
    ucn_sets,
    unique_idempotent_mod_radical,
)
from ringlab.constructions import group_ring_element, make_zn
from ringlab.errors import DomainError
from ringlab.expr import build

from . import oracles as O

KEYS = ("clean", "strongly_clean", "uniquely_clean", "usc", "guc", "gusc", "local", "boolean", "division", "abelian")

# expected values computed with tests/oracles.py (brute force over tuples) and frozen
# columns: clean strongly_clean uniquely_clean usc guc gusc local boolean division abelian | units idempotents radical center first_gusc_failure
FROZEN = {
    "Z2": ("1111111111", 1, 2, 1, 2, None),
    "Z4": ("1111111001", 2, 2, 2, 4, None),
    "Z5": ("1100111011", 4, 2, 1, 5, None),
    "Z6": ("1100000001", 2, 4, 1, 6, 2),
    "Z8": ("1111111001", 4, 2, 4, 8, None),
    "Z9": ("1100111001", 6, 2, 3, 9, None),
    "Z12": ("1100000001", 4, 4, 2, 12, 2),
    "Z2xZ3": ("1100000001", 2, 4, 1, 6, 4),
    "Z2xZ2": ("1111110101", 1, 4, 1, 4, None),
    "Z4xZ3": ("1100000001", 4, 4, 2, 12, 8),
    "T(2,Z2)": ("1101010000", 2, 6, 2, 2, None),
    "T(2,Z3)": ("1100000000", 12, 8, 3, 3, 2),
    "T(2,Z4)": ("1101010000", 16, 10, 16, 4, None),
    "T(3,Z2)": ("1101010000", 8, 26, 8, 2, None),
    "M(2,Z2)": ("1100010000", 6, 8, 1, 2, None),
    "M(2,Z3)": ("1100000000", 48, 14, 1, 3, 2),
    "GR(Z2,C2)": ("1111111001", 2, 2, 2, 4, None),
    "GR(Z2,C3)": ("1100000001", 3, 4, 1, 8, 3),
    "GR(Z2,C4)": ("1111111001", 8, 2, 8, 16, None),
    "GR(Z3,C2)": ("1100000001", 4, 4, 1, 9, 4),
    "GR(Z3,C3)": ("1100111001", 18, 2, 9, 27, None),
    "GR(Z4,C2)": ("1111111001", 8, 2, 8, 16, None),
    "GR(Z2,C5)": ("1100000001", 15, 4, 1, 32, 3),
    "GR(Z2,C2*C2)": ("1111111001", 8, 2, 8, 16, None),
    "GR(Z3,C2*C2)": ("1100000001", 16, 16, 1, 81, 4),
    "TrivExt(Z2)": ("1111111001", 2, 2, 2, 4, None),
    "TrivExt(Z3)": ("1100111001", 6, 2, 3, 9, None),
    "TrivExt(Z4)": ("1111111001", 8, 2, 8, 16, None),
}

# rings small enough to re-run the oracle on every test run
LIVE = {
    "Z6": O.zn(6), "Z9": O.zn(9), "Z2xZ3": O.product(O.zn(2), O.zn(3)), "T(2,Z2)": O.matrices(O.zn(2), 2, True),
    "M(2,Z2)": O.matrices(O.zn(2), 2), "GR(Z2,C3)": O.cyclic_group_ring(O.zn(2), 3),
    "GR(Z2,C2*C2)": O.klein_group_ring(O.zn(2)), "TrivExt(Z3)": O.trivial_extension(O.zn(3)),
}


def row(R):
    rep = classify_ring(R)
    bits = "".join("1" if rep.flags[k] else "0" for k in KEYS)
    w = rep.witness_for("gusc")
    c = rep.counts
    return (bits, c["units"], c["idempotents"], c["radical"], c["center"], w and w.element_ordinal)


@pytest.mark.parametrize("expr", sorted(FROZEN))
def test_classification_matches_frozen_oracle(expr, backend):
    assert row(build(expr)) == FROZEN[expr]


@pytest.mark.parametrize("expr", sorted(LIVE))
def test_oracle_reproduces_frozen_values(expr):
    R = LIVE[expr]
    f = O.flags(R)
    fails = O.gusc_failures(R)
    got = ("".join("1" if f[k] else "0" for k in KEYS), f["units"], f["idempotents"], f["radical"], f["center"],
           R.index[fails[0]] if fails else None)
    assert got == FROZEN[expr]


@pytest.mark.parametrize("expr", sorted(LIVE))
def test_per_element_counts_match_oracle(expr):
    Ro = LIVE[expr]
    R = build(expr)
    clean, strong = clean_counts(R)
    for i, a in enumerate(Ro.elements):
        assert clean[i] == len(O.decompositions(Ro, a, False))
        assert strong[i] == len(O.decompositions(Ro, a, True))


def test_decomposition_examples():
    assert [(d.e, d.u) for d in decompositions(make_zn(3), 0)] == [(1, 2)]
    P = build("Z2xZ3")
    a = P.ordinal_of("(0,2)")
    got = {(P.label(d.e), P.label(d.u)) for d in decompositions(P, a, strongly_only=True)}
    assert got == {("(1,0)", "(1,2)"), ("(1,1)", "(1,1)")}
    R = build("GR(Z2,C3)")
    Z2 = make_zn(2)
    a = group_ring_element(R, Z2, [1, 0, 1])
    got = {(R.label(d.e), R.label(d.u)) for d in decompositions(R, a, strongly_only=True)}
    assert {("1", "g^2"), ("1+g+g^2", "g")} <= got


def test_decompositions_are_valid(backend):
    R = build("T(2,Z3)")
    for a in range(R.order):
        for d in decompositions(R, a):
            assert d.e in R.idempotents and d.u in R.units and R.plus(d.e, d.u) == a
            assert d.strongly == (R.times(d.e, d.u) == R.times(d.u, d.e))


def test_element_class_examples():
    c = element_clean_class(make_zn(5), 2)
    assert c.clean_count == 2 and not c.uniquely_clean
    c = element_clean_class(make_zn(7), 0)
    assert c.usc and c.strongly_clean_count == 1
    T = build("T(2,Z2)")
    assert all(element_clean_class(T, a).usc for a in range(T.order))
    # usc without uniquely clean
    a = T.ordinal_of("[[1,0],[0,0]]")
    c = element_clean_class(T, a)
    assert c.usc and not c.uniquely_clean
    with pytest.raises(DomainError):
        element_clean_class(T, 99)


def test_named_classifications():
    f = classify_ring(build("T(2,Z2)")).flags
    assert (f["usc"], f["uniquely_clean"], f["gusc"], f["guc"], f["local"]) == (True, False, True, False, False)
    f = classify_ring(make_zn(5)).flags
    assert (f["guc"], f["uniquely_clean"], f["gusc"], f["local"]) == (True, False, True, True)


def test_every_false_flag_has_a_witness():
    for expr in ("Z6", "T(2,Z3)", "M(2,Z3)", "GR(Z2,C3)", "Z2xZ2"):
        rep = classify_ring(build(expr))
        for flag, value in rep.flags.items():
            if value is False:
                assert rep.witness_for(flag) is not None, (expr, flag)
        assert rep.diagram_violations == []


def test_gusc_witness_is_least_failing_nonunit():
    R = build("Z12")
    rep = classify_ring(R)
    w = rep.witness_for("gusc")
    clean, strong = clean_counts(R)
    first = min(a for a in range(R.order) if a not in R.units and strong[a] != 1)
    assert w.element_ordinal == first
    assert len(w.decompositions) == strong[first]


def test_ucn_examples():
    ucn, ucn0 = ucn_sets(make_zn(4))
    assert len(ucn) == len(ucn0) == 4
    ucn, ucn0 = ucn_sets(make_zn(5))
    assert list(ucn) == list(ucn0) == [0, 1]
    _, ucn0 = ucn_sets(make_zn(6))
    assert list(ucn0) == [0, 1, 3, 4]


def test_mod_radical_examples():
    for expr in ("Z4", "Z9", "TrivExt(Z3)"):
        R = build(expr)
        for a in range(R.order):
            if a not in R.units:
                res = unique_idempotent_mod_radical(R, a, True)
                assert res.count == 1 and res.idempotents == (R.zero,)
    assert unique_idempotent_mod_radical(make_zn(4), 3, False).idempotents == (1,)
    T = build("T(2,Z2)")
    counts = mod_radical_counts(T, True)
    assert all(counts[a] == 1 for a in range(T.order) if a not in T.units)


def test_mod_radical_vectorised_matches_scalar():
    R = build("T(2,Z3)")
    for flag in (True, False):
        counts = mod_radical_counts(R, flag)
        assert [unique_idempotent_mod_radical(R, a, flag).count for a in range(R.order)] == counts.tolist()


def test_diagram_edges():
    assert ("usc", "gusc") in DIAGRAM and ("guc", "gusc") in DIAGRAM and len(DIAGRAM) == 6


def test_report_json_is_plain():
    import json

    rep = classify_ring(build("Z2xZ3")).to_json_dict()
    assert json.loads(json.dumps(rep)) == rep
