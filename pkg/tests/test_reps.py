import random
from collections import Counter

import pytest

from lietrace import algebra_data, reps
from lietrace.errors import NonDominant


def test_dimension_anchors():
    a2 = algebra_data("a2")
    assert reps.dimension(a2, (1, 1)) == 8
    assert reps.dimension(a2, (0, 0)) == 1
    assert reps.dimension(algebra_data("e6"), (0, 0, 1, 0, 0, 0)) == 2925
    assert reps.dimension(algebra_data("g2"), (0, 1)) == 7
    assert reps.dimension(algebra_data("f4"), (0, 0, 0, 1)) == 26
    assert reps.dimension(algebra_data("e6"), (1, 0, 0, 0, 0, 0)) == 27


def test_dimension_rejects_non_dominant():
    with pytest.raises(NonDominant):
        reps.dimension(algebra_data("a2"), (1, -1))


def test_a1_triplet_weights():
    d = algebra_data("a1")
    ws = reps.weight_system(d, (2,))
    assert ws.entries == {(2,): 1, (0,): 1, (-2,): 1}


def test_a2_adjoint_weights():
    d = algebra_data("a2")
    ws = reps.weight_system(d, (1, 1))
    assert ws.dim == 8
    assert ws.entries[(0, 0)] == 2
    roots = set(d.positive_roots)
    roots |= {tuple(-x for x in r) for r in roots}
    assert {w for w in ws.entries if any(w)} == roots


def _su3_zero_weight_oracle():
    """Zero-weight multiplicity of the 27 of su(3), by brute multiset peeling.

    Build the weight multiset of adjoint (x) adjoint from the root system,
    peel off the five smaller components with independently constructed
    weight lists, and count what is left at zero.
    """
    fund = [(1, 0), (-1, 1), (0, -1)]  # defining rep, standard labels
    afund = [tuple(-x for x in w) for w in fund]
    adjoint = Counter()
    for u in fund:
        for v in afund:
            w = (u[0] + v[0], u[1] + v[1])
            adjoint[w] += 1
    adjoint[(0, 0)] -= 1  # remove the trace singlet
    product = Counter()
    for u, mu in adjoint.items():
        for v, mv in adjoint.items():
            product[(u[0] + v[0], u[1] + v[1])] += mu * mv
    # Decuplet = symmetric cube of the defining rep; conjugate for 10bar.
    dec = Counter()
    for i in range(3):
        for j in range(i, 3):
            for k in range(j, 3):
                w = tuple(fund[i][t] + fund[j][t] + fund[k][t] for t in range(2))
                dec[w] += 1
    dec_bar = Counter({tuple(-x for x in w): m for w, m in dec.items()})
    for part in (Counter({(0, 0): 1}), adjoint, adjoint, dec, dec_bar):
        for w, m in part.items():
            product[w] -= m
            assert product[w] >= 0
    return product[(0, 0)]


def test_a2_27_zero_weight_multiplicity_matches_oracle():
    assert _su3_zero_weight_oracle() == 3
    d = algebra_data("a2")
    ws = reps.weight_system(d, (2, 2))
    assert ws.entries[(0, 0)] == 3


def test_weights_sum_to_zero():
    for name, lam in (("a2", (2, 1)), ("b2", (1, 1)), ("g2", (0, 2)),
                      ("c3", (1, 0, 1))):
        d = algebra_data(name)
        ws = reps.weight_system(d, lam)
        total = [0] * d.rank
        for w, m in ws.entries.items():
            for i in range(d.rank):
                total[i] += m * w[i]
        assert all(x == 0 for x in total)


def test_multiplicity_constant_on_weyl_orbits():
    rng = random.Random(3)
    for name, lam in (("a3", (1, 1, 0)), ("b3", (0, 1, 0)), ("g2", (1, 1))):
        d = algebra_data(name)
        ws = reps.weight_system(d, lam)
        for w, m in ws.entries.items():
            v = w
            for _ in range(4):
                v = d.reflect(v, rng.randrange(d.rank))
            assert ws.entries[v] == m


def test_to_dominant_sign_conventions():
    a1 = algebra_data("a1")
    assert reps.to_dominant(a1, (3,)) == ((3,), 1)
    assert reps.to_dominant(a1, (-1,))[1] == 0  # shifted point on the wall
    assert reps.to_dominant(a1, (-3,)) == ((1,), -1)
    a2 = algebra_data("a2")
    assert reps.to_dominant(a2, (-1, 0))[1] == 0
    dom, sign = reps.to_dominant(a2, (-2, 1))
    assert sign == -1 and dom == (0, 0)
