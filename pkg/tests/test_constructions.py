import numpy as np
import pytest

import ringlab.constructions as cons
from ringlab.clean import classify_ring
from ringlab.errors import CapacityError, DomainError, MalformedBimoduleError, MalformedTableError, NotAnIdealError
from ringlab.expr import build
from ringlab.ring import ElementSet, verify_ring_axioms
from ringlab.structure import jacobson_radical


def flags(R):
    return classify_ring(R).flags


def test_zn_examples():
    Z2 = cons.make_zn(2)
    assert Z2.order == 2 and len(Z2.idempotents) == 2
    assert list(cons.make_zn(5).units) == [1, 2, 3, 4]
    assert len(cons.make_zn(6).idempotents) == 4
    with pytest.raises(DomainError):
        cons.make_zn(1)
    with pytest.raises(CapacityError):
        cons.make_zn(20, cap=16)


def test_matrix_rings():
    M = cons.make_matrix_ring(cons.make_zn(2), 2)
    a, b = M.ordinal_of("[[1,1],[1,0]]"), M.ordinal_of("[[0,1],[1,1]]")
    assert M.plus(a, b) == M.one and a in M.units and b in M.units
    T = cons.make_matrix_ring(cons.make_zn(2), 2, triangular=True)
    assert (T.order, len(T.units), len(T.idempotents)) == (8, 2, 6)
    Z3 = cons.make_zn(3)
    K = cons.make_matrix_ring(Z3, 1)
    assert np.array_equal(K.add, Z3.add) and np.array_equal(K.mul, Z3.mul)
    with pytest.raises(CapacityError):
        cons.make_matrix_ring(cons.make_zn(4), 3)


def test_products():
    P = build("Z2xZ3")
    assert P.order == 6
    keys = ("clean", "strongly_clean", "uniquely_clean", "usc", "guc", "gusc", "local", "boolean", "division", "abelian")
    assert {k: flags(P)[k] for k in keys} == {k: flags(build("Z6"))[k] for k in keys}
    a = P.ordinal_of("(0,2)")
    assert a == 4 and a not in P.units
    assert cons.product_coordinates(P, a) == (0, 2)
    TT = build("T(2,Z2)xT(2,Z2)")
    assert TT.order == 64 and flags(TT)["usc"]


def test_groups():
    C1 = cons.make_cyclic_group(1)
    assert C1.order == 1 and C1.is_p_group(2) and C1.is_p_group(3)
    C3 = cons.make_cyclic_group(3)
    assert [C3.element_order(g) for g in range(3)] == [1, 3, 3] and C3.is_p_group(3)
    C6 = cons.make_cyclic_group(6)
    assert not any(C6.is_p_group(p) for p in (2, 3, 5))
    K = cons.make_group_product([cons.make_cyclic_group(2), cons.make_cyclic_group(2)])
    assert K.order == 4 and K.is_p_group(2) and max(K.element_order(g) for g in range(4)) == 2
    with pytest.raises(MalformedTableError):
        cons.GroupTable(2, np.array([[0, 1], [1, 1]]))


def test_parse_group_table():
    G = cons.parse_group_table("order 3\n0 1 2\n1 2 0\n2 0 1\n")
    assert G.is_p_group(3)
    with pytest.raises(MalformedTableError):
        cons.parse_group_table("order 2\n1 0\n1 0\n")


def test_group_ring_examples():
    Z2 = cons.make_zn(2)
    RG = cons.make_group_ring(Z2, cons.make_cyclic_group(3))
    assert RG.order == 8
    e = cons.group_ring_element(RG, Z2, [1, 1, 1])
    assert RG.label(e) == "1+g+g^2" and e in RG.idempotents
    a = cons.group_ring_element(RG, Z2, [1, 0, 1])
    assert RG.label(a) == "1+g^2" and a not in RG.units
    triv = cons.make_group_ring(Z2, cons.make_cyclic_group(1))
    assert np.array_equal(triv.add, Z2.add) and np.array_equal(triv.mul, Z2.mul)


def test_group_ring_is_commutative_for_abelian_groups():
    R = build("GR(Z3,C2*C2)")
    assert len(R.center) == R.order
    T = build("GR(T(2,Z2),C2)")
    assert len(T.center) < T.order


def test_trivial_extension_examples():
    T = build("TrivExt(Z2)")
    assert T.order == 4 and flags(T)["local"]
    assert {T.label(x) for x in jacobson_radical(T)} == {"(0,0)", "(0,1)"}
    Z5 = cons.make_zn(5)
    T5 = cons.make_trivial_extension(Z5)
    one = lambda m: m * 5 + 1  # (1, m)
    for m in range(5):
        for n in range(5):
            assert T5.times(one(m), one(n)) == one((m + n) % 5)
    T3 = build("TrivExt(Z3)")
    assert T3.order == 9 and flags(T3)["local"] and flags(T3)["gusc"]


def test_ideal_extension_examples():
    Z2, Z4 = cons.make_zn(2), cons.make_zn(4)
    M = cons.ideal_bimodule(Z4, [0, 2], [0, 1], with_internal=True)
    I = cons.make_ideal_extension(Z2, M)
    assert I.order == 4 and verify_ring_axioms(I.add, I.mul).ok
    # zero internal product: same tables as the trivial extension
    T = cons.make_trivial_extension(Z2, M)
    assert np.array_equal(I.mul, T.mul)
    # (0, m)(0, n) = (0, mn) with a nonzero internal product
    Z8 = cons.make_zn(8)
    N = cons.ideal_bimodule(Z8, [0, 2, 4, 6], [0, 1, 2, 3], with_internal=True)
    X = cons.make_ideal_extension(Z4, N)
    for m in range(4):
        for n in range(4):
            mn = N.internal_mul[m, n]
            assert X.times(4 * m, 4 * n) == 4 * mn
    assert verify_ring_axioms(X.add, X.mul).ok


def test_bimodule_validation():
    Z2, Z3 = cons.make_zn(2), cons.make_zn(3)
    bad = cons.Bimodule(3, Z3.add, np.array([[0, 0, 0], [0, 2, 1]]), np.array([[0, 0], [0, 1], [0, 2]]))
    with pytest.raises(MalformedBimoduleError):
        cons.make_trivial_extension(Z2, bad)
    M = cons.regular_bimodule(Z2)
    with pytest.raises(MalformedBimoduleError):
        cons.make_ideal_extension(Z2, M)  # no internal multiplication
    with pytest.raises(NotAnIdealError):
        cons.ideal_bimodule(cons.make_zn(4), [0, 1], [0, 1])


def test_quotients():
    Q, proj = cons.make_quotient(cons.make_zn(4), ElementSet.from_ordinals(4, [0, 2]))
    assert Q.order == 2 and np.array_equal(Q.mul, cons.make_zn(2).mul)
    assert proj.tolist() == [0, 1, 0, 1]
    Z6 = cons.make_zn(6)
    same, _ = cons.make_quotient(Z6, ElementSet.from_ordinals(6, [0]))
    assert np.array_equal(same.mul, Z6.mul)
    T = build("T(2,Z2)")
    TJ, _ = cons.make_quotient(T, jacobson_radical(T))
    assert TJ.order == 4 and len(TJ.idempotents) == 4
    with pytest.raises(NotAnIdealError):
        cons.make_quotient(Z6, ElementSet.from_ordinals(6, [0, 1]))
    with pytest.raises(DomainError):
        cons.make_quotient(Z6, ElementSet.full(6))


def test_corners():
    T = build("T(2,Z2)")
    C = cons.corner_ring(T, T.one)
    assert np.array_equal(C.mul, T.mul)
    TT = build("T(2,Z2)xT(2,Z2)")
    e = TT.ordinal_of(f"({T.label(T.one)},{T.label(T.zero)})")
    E = cons.corner_ring(TT, e)
    keys = ("usc", "gusc", "guc", "uniquely_clean", "local")
    assert E.order == 8 and {k: flags(E)[k] for k in keys} == {k: flags(T)[k] for k in keys}
    M = build("M(2,Z2)")
    c = cons.corner_ring(M, M.ordinal_of("[[1,0],[0,0]]"))
    assert c.order == 2 and np.array_equal(c.mul, cons.make_zn(2).mul)
    with pytest.raises(DomainError):
        cons.corner_ring(M, M.ordinal_of("[[0,1],[0,0]]"))
    with pytest.raises(DomainError):
        cons.corner_ring(M, M.zero)
