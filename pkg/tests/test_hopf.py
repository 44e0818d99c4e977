from fractions import Fraction

import pytest

from rbx.families import build_family, builtin_group, group_algebra, sweedler, uq_sl2_bar
from rbx.hopf import (
    HopfStructureError,
    check_antipode,
    check_bialgebra,
    check_coassociativity,
    check_counit,
    dual_algebra,
    integrals,
    is_cocommutative_element,
    trace_element,
)

HOPF_FAMILIES = ["sweedler", "group:symmetric:3", "group:cyclic:3", "group:dihedral:4", "uqsl2:3"]


@pytest.fixture(scope="module")
def H():
    return sweedler()


def _dual_products(D):
    return {
        (D.basis[i], D.basis[j]): {D.basis[k]: c for k, c in D.table[i][j].items()}
        for i in range(D.dim)
        for j in range(D.dim)
        if D.table[i][j]
    }


def test_sweedler_dual_table(H):
    D = dual_algebra(H)
    assert D.basis == ("f1", "f2", "f3", "f4")
    assert _dual_products(D) == {
        ("f1", "f1"): {"f1": 1},
        ("f1", "f3"): {"f3": 1},
        ("f2", "f2"): {"f2": 1},
        ("f2", "f4"): {"f4": 1},
        ("f3", "f2"): {"f3": 1},
        ("f4", "f1"): {"f4": 1},
    }
    assert D.unit.coeffs == H.counit_values
    assert D.check_associativity().passed and D.check_unit().passed


def test_group_dual_is_pointwise():
    G = group_algebra(builtin_group("symmetric:3"))
    D = G.dual_algebra()
    for i in range(6):
        for j in range(6):
            assert D.table[i][j] == ({i: 1} if i == j else {})


@pytest.mark.parametrize("descriptor", HOPF_FAMILIES)
def test_family_axioms_and_dual(descriptor):
    H = build_family(descriptor)
    for check in (check_coassociativity, check_counit, check_antipode):
        r = check(H)
        assert r.passed, r
    assert check_bialgebra(H, budget=None).passed
    D = dual_algebra(H)
    assert D.check_associativity(budget=None).passed and D.check_unit().passed


@pytest.mark.parametrize("descriptor", HOPF_FAMILIES)
def test_trace_element_identities(descriptor):
    H = build_family(descriptor)
    x = trace_element(H)
    eps = H.counit(x)
    assert eps == H.dim
    assert x * x == eps * x
    assert H.trace_element_coordinates() == H.trace_element_via_traces()


def test_sweedler_trace_element(H):
    x = trace_element(H)
    assert x == H.algebra.parse_element("2 + 2*x")
    assert H.trace_element_via_traces() == [2, 2, 0, 0]
    assert is_cocommutative_element(H, x)


def test_group_trace_element_is_sum():
    G = group_algebra(builtin_group("symmetric:3"))
    assert trace_element(G).coeffs == (Fraction(1),) * 6


def test_sweedler_integrals(H):
    (left,) = integrals(H, "left")
    (right,) = integrals(H, "right")
    assert left == H.algebra.parse_element("y + xy")
    assert right == H.algebra.parse_element("y - xy")
    with pytest.raises(ValueError):
        integrals(H, "both")


@pytest.mark.parametrize("descriptor", HOPF_FAMILIES)
def test_integral_spaces_are_lines(descriptor):
    H = build_family(descriptor)
    for side in ("left", "right"):
        (lam,) = integrals(H, side)
        first = next(c for c in lam.coeffs if c)
        assert first == 1
        for i in range(H.dim):
            e = H.algebra.basis_element(i)
            prod = e * lam if side == "left" else lam * e
            assert prod == H.counit_values[i] * lam


def test_group_integrals_are_sum():
    G = group_algebra(builtin_group("cyclic:3"))
    assert [lam.coeffs for lam in integrals(G, "left")] == [(1, 1, 1)]
    assert [lam.coeffs for lam in integrals(G, "right")] == [(1, 1, 1)]


def test_cocommutativity(H):
    A = H.algebra
    assert is_cocommutative_element(H, A.basis_element("x"))
    assert not is_cocommutative_element(H, A.basis_element("y"))
    G = group_algebra(builtin_group("symmetric:3"))
    assert all(is_cocommutative_element(G, g) for g in G.algebra.gens())


def test_antipode_fault_reported(H):
    anti = H.antipode_data()
    anti[2] = {2: 1}  # S(y) = y
    bad = H.replace(antipode=anti)
    r = check_antipode(bad)
    assert not r.passed and r.labels == ("y",)


def test_coproduct_fault_reported(H):
    cop = H.coproduct_data()
    cop[2] = {(0, 2): 1}  # drop y (x) x
    bad = H.replace(coproduct=cop)
    r = check_coassociativity(bad)
    assert r.passed  # 1 (x) y alone is still coassociative
    assert not check_counit(bad).passed
    cop[2] = {(2, 0): 1, (2, 1): 1}
    r = check_coassociativity(H.replace(coproduct=cop))
    assert not r.passed and r.labels == ("y",)


def test_counit_fault_breaks_bialgebra(H):
    bad = H.replace(counit=[1, 1, 1, 0])
    assert not check_counit(bad).passed
    assert not check_bialgebra(bad).passed


def test_trace_element_detects_inconsistency(H):
    with pytest.raises(HopfStructureError):
        trace_element(H.replace(counit=[1, 0, 0, 0]))


def test_quantum_even_order():
    H = uq_sl2_bar(4, check=False)
    assert H.dim == 8
    results = {r.name: r.passed for r in H.check_all()}
    assert set(results) == {"associativity", "unit", "coassociativity", "counit", "bialgebra", "antipode"}
    assert all(results.values())
