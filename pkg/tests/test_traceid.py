import random
from fractions import Fraction

import pytest

from lietrace import algebra_data, reps, traceid
from lietrace.errors import NotTypeD
from lietrace.ratpoly import SparsePoly


def _terms_as_dict(relation):
    return {frozenset(mono): c for mono, c in relation.terms}


def _expected(terms):
    return {
        frozenset((n, e) for n, e in mono.items()): Fraction(c)
        for c, mono in terms
    }


def test_power_sum_basics():
    d = algebra_data("a1")
    ws = reps.weight_system(d, (1,))
    assert traceid.power_sum(ws, 0) == SparsePoly.constant(1, 2)
    assert traceid.power_sum(ws, 1).is_zero()
    assert traceid.power_sum(ws, 2) == SparsePoly(1, {(2,): 2})


def test_defining_generators():
    assert [g.degree for g in
            traceid.generators(algebra_data("a2"), "defining").items] == [2, 3]
    d3 = traceid.generators(algebra_data("d3"), "defining")
    assert [(g.name, g.degree) for g in d3.items] == [
        ("trA^2", 2), ("trA^4", 4), ("pf", 3)]


def test_adjoint_self_generators_a4():
    d = algebra_data("a4")
    gens = traceid.generators(d, "adjoint-self", max_degree=12)
    assert gens.names() == ["trF^2", "trF^4", "trF^6", "trF^8", "trF^10"]


def test_adjoint_self_generators_d4():
    d = algebra_data("d4")
    gens = traceid.generators(d, "adjoint-self", max_degree=12)
    assert gens.names() == ["trF^2", "trF^6", "trF^8", "trF^12"]


def test_reduce_defining_anchors():
    a2 = algebra_data("a2")
    ws = reps.weight_system(a2, (1, 0))
    gens = traceid.generators(a2, "defining")
    rel = traceid.reduce(a2, traceid.power_sum(ws, 4), 4, gens, "trA^4")
    assert _terms_as_dict(rel) == _expected([("1/2", {"trA^2": 2})])
    assert rel.unique

    b2 = algebra_data("b2")
    wsb = reps.weight_system(b2, (1, 0))
    gb = traceid.generators(b2, "defining")
    rel = traceid.reduce(b2, traceid.power_sum(wsb, 6), 6, gb, "trA^6")
    assert _terms_as_dict(rel) == _expected(
        [("-1/8", {"trA^2": 3}), ("3/4", {"trA^2": 1, "trA^4": 1})])

    e6 = algebra_data("e6")
    wse = reps.weight_system(e6, (1, 0, 0, 0, 0, 0))
    ge = traceid.generators(e6, "defining")
    rel = traceid.reduce(e6, traceid.power_sum(wse, 4), 4, ge, "trA^4")
    assert _terms_as_dict(rel) == _expected([("1/12", {"trA^2": 2})])


def test_cross_relation_anchors():
    rel = traceid.cross_relation(algebra_data("a2"), 6)
    assert _terms_as_dict(rel) == _expected(
        [("33/2", {"trA^2": 3}), ("-18", {"trA^3": 2})])
    rel = traceid.cross_relation(algebra_data("g2"), 2)
    assert _terms_as_dict(rel) == _expected([("4", {"trA^2": 1})])
    rel = traceid.cross_relation(algebra_data("f4"), 4)
    assert _terms_as_dict(rel) == _expected([("5/12", {"trA^2": 2})])


def test_cross_normalization_law():
    # Quadratic coefficient = dim(adjoint) / (C(defining) * dim(defining)).
    for name in ("a2", "b3", "c2", "d4", "g2", "f4", "e6"):
        d = algebra_data(name)
        lam = traceid.defining_weight(d)
        expected = Fraction(d.dim_adjoint) / (
            d.casimir(lam) * reps.dimension(d, lam))
        rel = traceid.cross_relation(d, 2)
        assert _terms_as_dict(rel) == {frozenset({("trA^2", 1)}): expected}


def test_self_relation_anchors():
    rel = traceid.self_relation_adjoint(algebra_data("a2"), 4)
    assert _terms_as_dict(rel) == _expected([("1/4", {"trF^2": 2})])
    assert traceid.self_relation_adjoint(algebra_data("a4"), 10) is None
    rel = traceid.self_relation_adjoint(algebra_data("g2"), 8)
    assert _terms_as_dict(rel) == _expected(
        [("-2905/319488", {"trF^2": 4}), ("20/39", {"trF^2": 1, "trF^6": 1})])


def test_det_invariant_d3():
    d3 = algebra_data("d3")
    det, pf = traceid.det_invariant(d3)
    assert det.total_degree() == 6
    assert pf.total_degree() == 3
    assert det == pf * pf * Fraction(-1)  # (-1)^3 pf^2
    ws = reps.weight_system(d3, (1, 0, 0))
    gens = traceid.generators(d3, "defining")
    rel = traceid.reduce(d3, traceid.power_sum(ws, 6), 6, gens, "trA^6")
    assert rel.coeff_map()[(("detA", 1),)] == -6


def test_det_invariant_requires_type_d():
    with pytest.raises(NotTypeD):
        traceid.det_invariant(algebra_data("b3"))


def test_char_poly_anchors():
    cp = traceid.char_poly(algebra_data("a2"), "defining")
    assert cp.degree == 3
    assert set(cp.coefficients) == {1, 0}
    assert dict(cp.coefficients[1]) == {(("trA^2", 1),): Fraction(-1, 2)}
    assert dict(cp.coefficients[0]) == {(("trA^3", 1),): Fraction(-1, 3)}

    cp = traceid.char_poly(algebra_data("c2"), "defining")
    assert cp.degree == 4
    assert dict(cp.coefficients[2]) == {(("trA^2", 1),): Fraction(-1, 2)}
    assert dict(cp.coefficients[0]) == {
        (("trA^2", 2),): Fraction(1, 8), (("trA^4", 1),): Fraction(-1, 4)}

    cp = traceid.char_poly(algebra_data("g2"), "defining")
    assert cp.degree == 7
    assert dict(cp.coefficients[3]) == {(("trA^2", 2),): Fraction(1, 16)}
    assert dict(cp.coefficients[1]) == {
        (("trA^2", 3),): Fraction(1, 96), (("trA^6", 1),): Fraction(-1, 6)}


def test_char_poly_d3_constant_term_is_det():
    cp = traceid.char_poly(algebra_data("d3"), "defining")
    assert dict(cp.coefficients[0]) == {(("detA", 1),): Fraction(1)}


def test_newton_consistency_direct_expansion():
    # Expand prod (t - weight form) directly and compare coefficient-wise.
    for name, lam in (("a1", (1,)), ("a2", (1, 0))):
        d = algebra_data(name)
        ws = reps.weight_system(d, lam)
        n = d.rank
        # Coefficients of t^j in prod (t - form), ascending in t.
        coeffs = [SparsePoly.constant(n, 1)]
        for w in ws.entries:  # all multiplicities are 1
            form = SparsePoly.linear_form(w)
            new = [SparsePoly.zero(n) for _ in range(len(coeffs) + 1)]
            for j, c in enumerate(coeffs):
                new[j + 1] = new[j + 1] + c
                new[j] = new[j] - c * form
            coeffs = new
        cp = traceid.char_poly(d, "defining")
        gens = traceid.generators(d, "defining")
        pmap = traceid.generator_poly_map(d, gens)
        for j in range(ws.dim):
            expected = coeffs[j]
            got = traceid.substitute(cp.coefficients.get(j, ()), pmap, n)
            assert got == expected


def test_odd_power_sums_vanish_for_self_conjugate():
    cases = [("b2", (1, 0)), ("c3", (1, 0, 0)), ("d4", (1, 0, 0, 0)),
             ("g2", (0, 1)), ("f4", (0, 0, 0, 1))]
    for name, lam in cases:
        d = algebra_data(name)
        ws = reps.weight_system(d, lam)
        for k in (1, 3, 5, 7):
            assert traceid.power_sum(ws, k).is_zero()
    for name in ("a2", "b3", "c2", "d3", "g2", "f4", "e6"):
        d = algebra_data(name)
        adj = reps.weight_system(d, d.highest_root)
        for k in (1, 3, 5):
            assert traceid.power_sum(adj, k).is_zero()
    e6 = algebra_data("e6")
    ws27 = reps.weight_system(e6, (1, 0, 0, 0, 0, 0))
    assert traceid.power_sum(ws27, 1).is_zero()
    assert traceid.power_sum(ws27, 3).is_zero()
    assert not traceid.power_sum(ws27, 5).is_zero()


def _transformed_relation(data, matrix, degree, target_rep="adjoint"):
    """Re-run a reduction after an integer change of the gamma basis."""
    from lietrace.ratpoly import LinearSystem, solve_exact

    l = data.rank

    def transform(w):
        return tuple(sum(matrix[i][j] * w[i] for i in range(l)) for j in range(l))

    def psum(ws, k):
        acc = SparsePoly.zero(l)
        for w, m in ws.entries.items():
            acc = acc + (SparsePoly.linear_form(transform(w)) ** k).scaled(m)
        return acc

    defw = traceid.defining_weight(data)
    wsd = reps.weight_system(data, defw)
    base = traceid.generators(data, "defining")
    items = []
    for g in base.items:
        if g.name == "pf":
            seen = set()
            pf = SparsePoly.constant(l, 1)
            for mu in wsd.entries:
                if mu in seen:
                    continue
                neg = tuple(-x for x in mu)
                seen.update((mu, neg))
                pf = pf * SparsePoly.linear_form(transform(max(mu, neg)))
            items.append(traceid.Generator("pf", g.degree, pf))
        else:
            items.append(traceid.Generator(g.name, g.degree, psum(wsd, g.degree)))
    gens = traceid.GeneratorSet(tuple(items), "defining",
                                base.pf_parity_rank)
    adj = reps.weight_system(data, data.highest_root)
    target = psum(adj, degree)
    return traceid.reduce(data, target, degree, gens, f"trF^{degree}")


def test_relation_invariance_under_basis_change():
    rng = random.Random(42)
    for name, degree in (("a2", 6), ("b2", 6), ("g2", 6), ("d3", 6)):
        d = algebra_data(name)
        baseline = traceid.cross_relation(d, degree)
        for _ in range(3):
            m = _random_unimodular(rng, d.rank)
            moved = _transformed_relation(d, m, degree)
            assert _terms_as_dict(moved) == _terms_as_dict(baseline)


def _random_unimodular(rng, n):
    # Product of elementary integer row operations: always det +-1.
    m = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(3 * n):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        c = rng.choice((-2, -1, 1, 2))
        for k in range(n):
            m[i][k] += c * m[j][k]
    return m


def test_master_contract_substitution():
    # Substituting generator polynomials into a relation rebuilds the target.
    for name, k in (("a3", 8), ("c3", 8), ("d3", 8), ("g2", 10)):
        d = algebra_data(name)
        adj = reps.weight_system(d, d.highest_root)
        target = traceid.power_sum(adj, k)
        rel = traceid.cross_relation(d, k)
        gens = traceid.generators(d, "defining")
        pmap = traceid.generator_poly_map(d, gens)
        assert traceid.substitute(rel.terms, pmap, d.rank) == target


def test_relation_text_format():
    rel = traceid.cross_relation(algebra_data("a2"), 4)
    assert rel.text() == "trF^4 = 9*(trA^2)^2"
    b2 = algebra_data("b2")
    ws = reps.weight_system(b2, (1, 0))
    gens = traceid.generators(b2, "defining")
    rel = traceid.reduce(b2, traceid.power_sum(ws, 6), 6, gens, "trA^6")
    assert rel.text() == "trA^6 = -1/8*(trA^2)^3 + 3/4*(trA^2)*(trA^4)"
