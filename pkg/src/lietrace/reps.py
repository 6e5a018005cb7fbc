"""Irreducible representation data: dimensions, weight systems, reflections.

Weight multiplicities come from the Freudenthal recursion evaluated on the
dominant slice; the full system is filled in by Weyl-orbit lookup.  All
arithmetic is exact integer/Fraction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InternalInconsistency, NonDominant


@dataclass(frozen=True)
class WeightSystem:
    highest: tuple
    entries: dict  # weight tuple -> positive multiplicity
    dim: int


def _require_dominant(data, lam):
    data.check_rank(lam)
    if not data.is_dominant(lam):
        raise NonDominant(f"{lam} is not dominant for {data.id}")


def dimension(data, lam):
    """Weyl dimension formula, as an exact integer."""
    _require_dominant(data, lam)
    shifted = tuple(x + 1 for x in lam)  # lam + delta
    num = 1
    den = 1
    for alpha in data.positive_roots:
        form = data._root_forms[alpha]
        num *= sum(s * f for s, f in zip(shifted, form))
        den *= sum(f for f in form)  # delta = (1,...,1)
    d, r = divmod(num, den)
    if r:
        raise InternalInconsistency("Weyl dimension not integral")
    return d


def _member_test(data, lam):
    """Return a predicate 'mu is a weight of V_lam'.

    Uses the fact that mu is a weight iff its dominant representative nu
    satisfies lam - nu in the non-negative root lattice.
    """
    l = data.rank
    det = data._det_cartan
    Ainv = data.inverse_cartan
    # Integer matrix det * A^{-1} for an integral coordinate test.
    M = [[int(Ainv[i][j] * det) for j in range(l)] for i in range(l)]
    sgn = 1 if det > 0 else -1

    def member(mu):
        nu = data.dominant_rep(mu)
        diff = [a - b for a, b in zip(lam, nu)]
        for j in range(l):
            c = sum(diff[i] * M[i][j] for i in range(l))
            if sgn * c < 0 or c % det:
                return False
        return True

    return member


def weight_system(data, lam):
    """Full weight multiset of the irrep with highest weight ``lam``."""
    _require_dominant(data, lam)
    lam = tuple(lam)
    cached = data._ws_cache.get(lam)
    if cached is not None:
        return cached

    l = data.rank
    simple = [tuple(data.cartan_matrix[i]) for i in range(l)]
    member = _member_test(data, lam)

    # BFS over the weight set: every weight below lam is reachable by
    # subtracting simple roots through other weights.
    weights = {lam}
    frontier = [lam]
    rejected = set()
    while frontier:
        nxt = []
        for mu in frontier:
            for s in simple:
                cand = tuple(a - b for a, b in zip(mu, s))
                if cand in weights or cand in rejected:
                    continue
                if member(cand):
                    weights.add(cand)
                    nxt.append(cand)
                else:
                    rejected.add(cand)
        frontier = nxt

    # Freudenthal on dominant weights, by increasing depth below lam.
    dominants = [mu for mu in weights if data.is_dominant(mu)]

    def depth(mu):
        coords = data.alpha_coords(tuple(a - b for a, b in zip(lam, mu)))
        h = sum(coords)
        assert h.denominator == 1
        return int(h)

    dominants.sort(key=lambda mu: (depth(mu), mu))
    shifted_top = tuple(x + 1 for x in lam)
    norm_top = data._dot_scaled(shifted_top, shifted_top)
    mult = {lam: 1}
    for mu in dominants:
        if mu == lam:
            continue
        total = 0
        for alpha, form in data._root_forms.items():
            k = 1
            while True:
                nu = tuple(a + k * b for a, b in zip(mu, alpha))
                if nu not in weights:
                    break
                m = mult.get(nu)
                if m is None:
                    m = mult[data.dominant_rep(nu)]
                total += m * sum(x * f for x, f in zip(nu, form))
                k += 1
        shifted = tuple(x + 1 for x in mu)
        den = norm_top - data._dot_scaled(shifted, shifted)
        if den <= 0:
            raise InternalInconsistency("Freudenthal denominator <= 0")
        m, r = divmod(2 * total, den)
        if r or m <= 0:
            raise InternalInconsistency("Freudenthal multiplicity not a positive int")
        mult[mu] = m

    entries = {}
    for mu in weights:
        entries[mu] = mult[mu] if mu in mult else mult[data.dominant_rep(mu)]

    dim = sum(entries.values())
    if dim != dimension(data, lam):
        raise InternalInconsistency("weight multiplicities disagree with Weyl dimension")
    ws = WeightSystem(highest=lam, entries=entries, dim=dim)
    data._ws_cache[lam] = ws
    return ws


def to_dominant(data, mu):
    """Reflect ``mu`` into the dominant chamber under the rho-shifted action.

    Returns (dominant weight, sign of the Weyl element); sign 0 when the
    shifted point lies on a chamber wall (the Racah-Speiser drop case), in
    which case the weight slot is unspecified.
    """
    data.check_rank(mu)
    l = data.rank
    A = data.cartan_matrix
    v = [x + 1 for x in mu]
    sign = 1
    while True:
        for i in range(l):
            if v[i] < 0:
                c = v[i]
                row = A[i]
                for j in range(l):
                    v[j] -= c * row[j]
                sign = -sign
                break
        else:
            break
    if any(x == 0 for x in v):
        return tuple(x - 1 for x in v), 0
    return tuple(x - 1 for x in v), sign
