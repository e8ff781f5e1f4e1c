import numpy as np
import pytest

from ringlab.constructions import make_zn
from ringlab.errors import AxiomError, DomainError, MalformedTableError, TrivialRingError
from ringlab.expr import build
from ringlab.ring import (
    ElementSet,
    FiniteRing,
    element_predicates,
    format_ring_tables,
    inverse,
    parse_ring_tables,
    read_ring_tables,
    structure_sets,
    verify_ring_axioms,
)


def zn_tables(n):
    ar = np.arange(n)
    return (ar[:, None] + ar[None, :]) % n, (ar[:, None] * ar[None, :]) % n


def law_fails(add, mul, axiom, w):
    """Re-check a reported witness by hand."""
    if axiom == "left distributivity":
        a, b, c = w
        return mul[a, add[b, c]] != add[mul[a, b], mul[a, c]]
    if axiom == "right distributivity":
        b, c, a = w
        return mul[add[b, c], a] != add[mul[b, a], mul[c, a]]
    if axiom == "multiplicative associativity":
        a, b, c = w
        return mul[mul[a, b], c] != mul[a, mul[b, c]]
    raise AssertionError(axiom)


def test_z4_passes(backend):
    rep = verify_ring_axioms(*zn_tables(4))
    assert rep.ok and rep.zero == 0 and rep.one == 1


def test_z4_corrupted_fails_with_witness(backend):
    add, mul = zn_tables(4)
    mul = mul.copy()
    mul[2, 3] = 1
    rep = verify_ring_axioms(add, mul)
    assert not rep.ok
    assert rep.axiom in ("left distributivity", "right distributivity", "multiplicative associativity")
    assert law_fails(add, mul, rep.axiom, rep.witness)
    with pytest.raises(AxiomError) as info:
        FiniteRing(add, mul)
    assert info.value.report == rep


def test_backends_agree_on_first_witness():
    from ringlab import kernels

    add, mul = zn_tables(6)
    mul = mul.copy()
    mul[4, 5] = 3
    reports = set()
    for name in kernels.BACKENDS:
        with kernels.use_backend(name):
            r = verify_ring_axioms(add, mul)
            reports.add((r.axiom, r.witness))
    assert len(reports) == 1


@pytest.mark.parametrize("expr", ["T(2,Z2)", "M(2,Z2)", "GR(Z2,C3)", "TrivExt(Z3)", "Z2xZ3", "Quot(Z8,J)"])
def test_constructions_satisfy_axioms(expr, backend):
    R = build(expr)
    assert verify_ring_axioms(R.add, R.mul, R.zero, R.one).ok


def test_additive_failures():
    add, mul = zn_tables(3)
    bad = add.copy()
    bad[1, 2], bad[2, 1] = 0, 1
    rep = verify_ring_axioms(bad, mul)
    assert not rep.ok and rep.axiom.startswith("additive")
    # zero equal to one
    z = np.zeros((2, 2), dtype=int)
    assert verify_ring_axioms(zn_tables(2)[0], z).axiom in ("multiplicative identity",)


def test_malformed_tables():
    with pytest.raises(MalformedTableError):
        verify_ring_axioms(np.zeros((2, 3), dtype=int), np.zeros((2, 3), dtype=int))
    with pytest.raises(MalformedTableError):
        verify_ring_axioms(np.zeros((2, 2), dtype=int), np.zeros((3, 3), dtype=int))
    with pytest.raises(MalformedTableError):
        verify_ring_axioms([[0, 5], [5, 0]], [[0, 0], [0, 1]])
    with pytest.raises(TrivialRingError):
        verify_ring_axioms([[0]], [[0]])


def test_inverse_examples():
    assert inverse(make_zn(5), 2) == 3
    assert inverse(make_zn(4), 2) is None
    T = build("T(2,Z2)")
    a = T.ordinal_of("[[1,1],[0,1]]")
    assert inverse(T, a) == a
    with pytest.raises(DomainError):
        inverse(T, 8)


def test_element_predicates():
    assert tuple(element_predicates(make_zn(6), 3)) == (False, True, False, True)
    M = build("M(2,Z2)")
    assert tuple(element_predicates(M, M.ordinal_of("[[0,1],[0,0]]"))) == (False, False, True, False)
    for R in (make_zn(7), M):
        assert tuple(element_predicates(R, R.one)) == (True, True, False, True)


def test_structure_sets():
    s = structure_sets(make_zn(6))
    assert list(s.idempotents) == [0, 1, 3, 4]
    T = structure_sets(build("T(2,Z2)"))
    assert (len(T.idempotents), len(T.units)) == (6, 2)
    M = build("M(2,Z2)")
    s = structure_sets(M)
    assert (len(s.units), len(s.idempotents)) == (6, 8)
    assert list(s.center) == [M.zero, M.one]
    assert list(structure_sets(make_zn(5)).units) == [1, 2, 3, 4]


def test_element_set_operations():
    A = ElementSet.from_ordinals(8, [0, 2, 4])
    B = ElementSet.from_ordinals(8, [2, 3])
    assert list(A & B) == [2] and list(A | B) == [0, 2, 3, 4] and list(A - B) == [0, 4]
    assert len(A.complement()) == 5
    assert ElementSet.from_ordinals(8, [2]) < A and not A < A and A <= A
    assert A.as_int() == 0b10101
    assert hash(A) == hash(ElementSet.from_ordinals(8, [4, 2, 0]))
    assert 4 in A and 5 not in A
    with pytest.raises(DomainError):
        ElementSet.from_ordinals(8, [8])


def test_ring_arithmetic_helpers():
    R = make_zn(7)
    assert R.plus(5, 4) == 2 and R.times(3, 5) == 1 and R.minus(2, 5) == 4 and R.negate(3) == 4
    assert R.power(3, 6) == 1 and R.multiple(9) == 2 and R.multiple(3, 4) == 5
    assert R.label(3) == "3"
    with pytest.raises(DomainError):
        R.plus(0, 7)


def test_table_file_round_trip(tmp_path):
    R = build("T(2,Z2)")
    text = format_ring_tables(R)
    path = tmp_path / "t2.txt"
    path.write_text("# upper triangular 2x2 over Z2\n" + text)
    S = read_ring_tables(path)
    assert np.array_equal(S.add, R.add) and np.array_equal(S.mul, R.mul)
    assert (S.zero, S.one) == (R.zero, R.one)


@pytest.mark.parametrize("text", [
    "",
    "order x\n0\n\n0",
    "ord 2\n0 1\n1 0\n\n0 0\n0 1",
    "order 2\n0 1\n1 0",
    "order 2\n0 1\n1 0\n\n0 0",
    "order 2\n0 1\n1 a\n\n0 0\n0 1",
    "order 2\n0 1 0\n1 0\n\n0 0\n0 1",
])
def test_malformed_table_files(text):
    with pytest.raises(MalformedTableError):
        parse_ring_tables(text)


def test_table_file_axiom_violation():
    text = "order 2\n0 1\n1 0\n\n0 0\n0 0\n"
    with pytest.raises(AxiomError):
        parse_ring_tables(text)
