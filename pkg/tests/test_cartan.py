from fractions import Fraction

import pytest

from lietrace import algebra_data, parse_algebra
from lietrace.cartan import AlgebraId
from lietrace.errors import InvalidAlgebra, NonDominant

CATALOG = [
    "a1", "a2", "a3", "a4", "a5", "a6",
    "b2", "b3", "b4", "b5", "b6",
    "c2", "c3", "c4", "c5", "c6",
    "d3", "d4", "d5", "d6",
    "e6", "f4", "g2",
]


def test_parse_names():
    assert parse_algebra("su3") == AlgebraId("A", 2)
    assert parse_algebra("SU2") == AlgebraId("A", 1)
    assert parse_algebra("so7") == AlgebraId("B", 3)
    assert parse_algebra("so10") == AlgebraId("D", 5)
    assert parse_algebra("sp4") == AlgebraId("C", 2)
    assert parse_algebra("G2") == AlgebraId("G", 2)
    assert parse_algebra("a2") == parse_algebra("A2")


@pytest.mark.parametrize("bad", ["so4", "so3", "sp3", "sp2", "b1", "d2", "e9",
                                 "e5", "g3", "f5", "su1", "x7", "a0"])
def test_parse_rejects_invalid(bad):
    with pytest.raises(InvalidAlgebra):
        parse_algebra(bad)


def test_primitive_degrees_table():
    assert algebra_data("a2").primitive_degrees == (2, 3)
    assert algebra_data("d4").primitive_degrees == (2, 4, 6, 4)
    assert algebra_data("d3").primitive_degrees == (2, 4, 3)
    assert algebra_data("e6").primitive_degrees == (2, 5, 6, 8, 9, 12)
    assert algebra_data("f4").primitive_degrees == (2, 6, 8, 12)
    assert algebra_data("g2").primitive_degrees == (2, 6)
    assert algebra_data("b4").primitive_degrees == (2, 4, 6, 8)


def test_inverse_cartan_is_exact_inverse():
    for name in CATALOG:
        d = algebra_data(name)
        n = d.rank
        A = d.cartan_matrix
        Ainv = d.inverse_cartan
        for i in range(n):
            for j in range(n):
                s = sum(A[i][k] * Ainv[k][j] for k in range(n))
                assert s == (1 if i == j else 0)


def test_inverse_cartan_denominators_divide_det():
    for name in CATALOG:
        d = algebra_data(name)
        det = abs(d._det_cartan)
        for row in d.inverse_cartan:
            for x in row:
                assert det % x.denominator == 0


def test_symmetrizer_symmetrizes():
    for name in CATALOG:
        d = algebra_data(name)
        A = d.cartan_matrix
        s = d.symmetrizer
        n = d.rank
        for i in range(n):
            for j in range(n):
                assert s[i] * A[i][j] == s[j] * A[j][i]


def test_adjoint_casimir_is_one_everywhere():
    for name in CATALOG:
        d = algebra_data(name)
        assert d.casimir(d.highest_root) == 1
        shifted = tuple(x + 2 for x in d.highest_root)
        assert d.inner_product(d.highest_root, shifted) == 1


def test_casimir_paper_anchors():
    assert algebra_data("a2").casimir((2, 2)) == Fraction(8, 3)
    assert algebra_data("f4").casimir((0, 0, 0, 2)) == Fraction(13, 9)
    assert algebra_data("e6").casimir((0,) * 6) == 0


def test_casimir_rejects_non_dominant():
    with pytest.raises(NonDominant):
        algebra_data("a2").casimir((-1, 0))


def test_inner_product_is_bilinear_symmetric():
    d = algebra_data("a3")
    zero = (0, 0, 0)
    lam = (1, 2, 0)
    mu = (0, 1, 1)
    assert d.inner_product(zero, mu) == 0
    assert d.inner_product(lam, mu) == d.inner_product(mu, lam)
    two_lam = tuple(2 * x for x in lam)
    assert d.inner_product(two_lam, mu) == 2 * d.inner_product(lam, mu)


def test_highest_root_conventions():
    # Adjoint highest weights in the label conventions of the tables.
    assert algebra_data("a2").highest_root == (1, 1)
    assert algebra_data("b2").highest_root == (0, 2)
    assert algebra_data("b3").highest_root == (0, 1, 0)
    assert algebra_data("c2").highest_root == (2, 0)
    assert algebra_data("d3").highest_root == (0, 1, 1)
    assert algebra_data("d4").highest_root == (0, 1, 0, 0)
    assert algebra_data("g2").highest_root == (1, 0)
    assert algebra_data("f4").highest_root == (1, 0, 0, 0)
    assert algebra_data("e6").highest_root == (0, 0, 0, 0, 0, 1)


def test_positive_root_counts():
    expected = {"a2": 3, "a3": 6, "b2": 4, "c3": 9, "d4": 12, "g2": 6,
                "f4": 24, "e6": 36}
    for name, count in expected.items():
        d = algebra_data(name)
        assert len(d.positive_roots) == count
        assert d.dim_adjoint == 2 * count + d.rank


def test_e7_e8_catalog_entries_exist():
    assert algebra_data("e7").primitive_degrees == (2, 6, 8, 10, 12, 14, 18)
    assert algebra_data("e8").dim_adjoint == 248
