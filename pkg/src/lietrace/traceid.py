"""Trace polynomials of representations and their reduction to primitive invariants.

A generic Cartan element is parameterized by indeterminates g_1..g_l; the
trace of its k-th power in a representation is the k-th power sum of the
weight linear forms.  Reductions express such polynomials as exact rational
combinations of a chosen free generating set, via the ratpoly solver.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import reps
from .errors import InternalInconsistency, NotTypeD
from .ratpoly import LinearSystem, SparsePoly, solve_exact


def defining_weight(data):
    """Highest weight of the defining representation used in the tables."""
    l = data.rank
    series = data.id.series
    if series == "G":
        return (0, 1)
    if series == "F":
        return (0, 0, 0, 1)
    if series == "E" and l == 6:
        return (1, 0, 0, 0, 0, 0)
    w = [0] * l
    w[0] = 1
    return tuple(w)


def power_sum(ws, k):
    """Sum over the weight system of (weight . gamma)^k, an exact polynomial."""
    if k < 0:
        raise ValueError("negative power")
    cache = _psum_cache(ws)
    if k not in cache:
        _extend_power_sums(ws, k)
    return cache[k]


def _psum_cache(ws):
    cache = getattr(ws, "_power_sums", None)
    if cache is None:
        cache = {}
        object.__setattr__(ws, "_power_sums", cache)
    return cache


def _extend_power_sums(ws, kmax):
    """Compute power sums 0..kmax in one sweep, pairing mu with -mu."""
    n = len(ws.highest)
    cache = _psum_cache(ws)
    paired = []  # (linear form, mult, both_signs)
    zero_mult = 0
    seen = set()
    for mu, m in ws.entries.items():
        if mu in seen:
            continue
        if not any(mu):
            zero_mult += m
            continue
        neg = tuple(-x for x in mu)
        other = ws.entries.get(neg, 0) if neg not in seen else 0
        seen.add(mu)
        if neg in ws.entries and neg not in (mu,):
            seen.add(neg)
            if other != m:
                # Asymmetric pair: treat separately.
                paired.append((SparsePoly.linear_form(mu), m, False))
                paired.append((SparsePoly.linear_form(neg), other, False))
            else:
                paired.append((SparsePoly.linear_form(mu), m, True))
        else:
            paired.append((SparsePoly.linear_form(mu), m, False))

    sums = {k: SparsePoly.zero(n) for k in range(kmax + 1)}
    sums[0] = SparsePoly.constant(n, ws.dim)
    for form, m, both in paired:
        g = SparsePoly.constant(n, 1)
        for k in range(1, kmax + 1):
            g = g * form
            if both:
                if k % 2 == 0:
                    sums[k] = sums[k] + g.scaled(2 * m)
            else:
                sums[k] = sums[k] + g.scaled(m)
    cache.update(sums)


@dataclass(frozen=True)
class Generator:
    name: str
    degree: int
    poly: SparsePoly


@dataclass(frozen=True)
class GeneratorSet:
    items: tuple  # of Generator
    basis_kind: str  # "defining" | "adjoint-self"
    pf_parity_rank: int | None = None  # rank l for D-series Pfaffian handling

    def names(self):
        return [g.name for g in self.items]

    def poly_map(self):
        return {g.name: g.poly for g in self.items}


@dataclass(frozen=True)
class Relation:
    """target = sum of coeff * monomial-in-generators, all exact."""

    target: str
    terms: tuple  # ((("name", exp), ...), Fraction) pairs, lex-desc order
    unique: bool

    def coeff_map(self):
        return {mono: c for mono, c in self.terms}

    def text(self):
        if not self.terms:
            return f"{self.target} = 0"
        bits = []
        for i, (mono, c) in enumerate(self.terms):
            body = "*".join(
                f"({name})^{e}" if e > 1 else f"({name})" for name, e in mono
            )
            mag = abs(c)
            coeff = "" if mag == 1 and body else str(mag)
            piece = coeff + ("*" if coeff and body else "") + (body or "")
            if i == 0:
                bits.append(("-" if c < 0 else "") + piece)
            else:
                bits.append(("- " if c < 0 else "+ ") + piece)
        return f"{self.target} = " + " ".join(bits)

    def to_json(self):
        return {
            "target": self.target,
            "unique": self.unique,
            "terms": [
                {"mono": {name: e for name, e in mono}, "coeff": str(c)}
                for mono, c in self.terms
            ],
        }


def generators(data, kind, max_degree=None):
    """Free generating sets: defining-rep power sums (with the D-series
    Pfaffian), or the greedy independent prefix of adjoint power sums."""
    if kind == "defining":
        ws = reps.weight_system(data, defining_weight(data))
        items = []
        degrees = data.primitive_degrees
        if max_degree is not None:
            degrees = tuple(d for d in degrees if d <= max_degree)
        is_d = data.id.series == "D"
        # For the D series the degree-l slot (listed last) is the Pfaffian,
        # distinguished from tr A^l by position when l is even.
        for pos, d in enumerate(degrees):
            if is_d and pos == len(degrees) - 1 and d == data.rank:
                _, pf = det_invariant(data)
                items.append(Generator("pf", d, pf))
            else:
                items.append(Generator(f"trA^{d}", d, power_sum(ws, d)))
        return GeneratorSet(tuple(items), "defining",
                            data.rank if is_d else None)
    if kind == "adjoint-self":
        if max_degree is None:
            raise ValueError("adjoint-self generators need max_degree")
        ws = reps.weight_system(data, data.highest_root)
        items = []
        for k in range(2, max_degree + 1, 2):
            p = power_sum(ws, k)
            current = GeneratorSet(tuple(items), "adjoint-self")
            if not items or _reduce_poly(data, p, k, current) is None:
                items.append(Generator(f"trF^{k}", k, p))
        return GeneratorSet(tuple(items), "adjoint-self")
    raise ValueError(f"unknown generator kind {kind!r}")


def _monomials_of_degree(degrees, total):
    """All exponent tuples e with sum(e_i * degrees[i]) == total."""
    out = []

    def rec(i, rem, acc):
        if i == len(degrees):
            if rem == 0:
                out.append(tuple(acc))
            return
        step = degrees[i]
        top = rem // step
        for e in range(top + 1):
            rec(i + 1, rem - e * step, acc + [e])

    rec(0, total, [])
    return out


def _reduce_poly(data, target, degree, gens):
    """Solve target = combination of generator monomials of matching degree.

    Returns (solution, exponent tuples) or None.
    """
    if target.is_zero():
        return solve_exact(LinearSystem((), target)), ()
    degrees = [g.degree for g in gens.items]
    exps = _monomials_of_degree(degrees, degree)
    # Drop the trivial monomial reproducing a lone generator as itself.
    exps = [e for e in exps if sum(e) > 0]
    if not exps:
        return None
    exps.sort(key=lambda e: (sum(e), e))
    power_cache = {}

    def gen_power(i, k):
        key = (i, k)
        if key not in power_cache:
            power_cache[key] = gens.items[i].poly ** k
        return power_cache[key]

    columns = []
    for e in exps:
        col = None
        for i, k in enumerate(e):
            if not k:
                continue
            p = gen_power(i, k)
            col = p if col is None else col * p
        columns.append(col)
    sol = solve_exact(LinearSystem(tuple(columns), target))
    if sol is None:
        return None
    return sol, exps


def _relation_from_solution(data, target_label, sol, exps, gens):
    names = gens.names()
    terms = []
    l = gens.pf_parity_rank
    for e, c in zip(exps, sol.coefficients):
        if not c:
            continue
        mono = []
        coeff = Fraction(c)
        for name, k in zip(names, e):
            if not k:
                continue
            if name == "pf":
                if k % 2:
                    raise InternalInconsistency(
                        "odd Pfaffian power in a trace reduction"
                    )
                # pf^2 = (-1)^l det A, reported in the determinant form.
                coeff *= Fraction((-1) ** l) ** (k // 2)
                mono.append(("detA", k // 2))
            else:
                mono.append((name, k))
        terms.append((tuple(mono), coeff))
    terms.sort(key=lambda t: tuple(dict(t[0]).get(n, 0) for n in _out_names(names)),
               reverse=True)
    return Relation(target=target_label, terms=tuple(terms), unique=sol.unique)


def _out_names(names):
    return ["detA" if n == "pf" else n for n in names]


def reduce(data, target, degree, gens, target_label="target"):
    """Express a homogeneous invariant in the generator set; None if impossible."""
    got = _reduce_poly(data, target, degree, gens)
    if got is None:
        return None
    sol, exps = got
    return _relation_from_solution(data, target_label, sol, exps, gens)


def cross_relation(data, k):
    """tr F^k of the adjoint in defining-representation primitives."""
    if k < 2:
        raise ValueError("cross relations start at k = 2")
    adj = reps.weight_system(data, data.highest_root)
    target = power_sum(adj, k)
    gens = generators(data, "defining")
    rel = reduce(data, target, k, gens, target_label=f"trF^{k}")
    if rel is None:
        raise InternalInconsistency(
            f"adjoint trace tr F^{k} did not reduce in the free basis"
        )
    return rel


def self_relation_adjoint(data, k):
    """tr F^k in lower adjoint traces; None is a legitimate finding."""
    if k % 2 or k < 4:
        raise ValueError("adjoint self relations need even k >= 4")
    adj = reps.weight_system(data, data.highest_root)
    gens = generators(data, "adjoint-self", max_degree=k - 2)
    return reduce(data, power_sum(adj, k), k, gens, target_label=f"trF^{k}")


def det_invariant(data):
    """(det A, Pfaffian) of the D-series defining representation."""
    if data.id.series != "D":
        raise NotTypeD(f"{data.id} has no Pfaffian invariant")
    ws = reps.weight_system(data, defining_weight(data))
    l = data.rank
    det = SparsePoly.constant(l, 1)
    pf = SparsePoly.constant(l, 1)
    seen = set()
    for mu in ws.entries:
        form = SparsePoly.linear_form(mu)
        det = det * form
        if mu in seen:
            continue
        neg = tuple(-x for x in mu)
        seen.update((mu, neg))
        pf = pf * SparsePoly.linear_form(max(mu, neg))
    if det != pf * pf * Fraction((-1) ** l):
        raise InternalInconsistency("det A != (-1)^l pf^2")
    return det, pf


@dataclass(frozen=True)
class CharPoly:
    rep: str  # "defining" | "adjoint"
    degree: int
    coefficients: dict  # t-power -> Relation-style terms tuple

    def text(self):
        bits = [f"t^{self.degree}"]
        for power in sorted(self.coefficients, reverse=True):
            terms = self.coefficients[power]
            tpart = "" if power == 0 else ("*t" if power == 1 else f"*t^{power}")
            if len(terms) > 1:
                expr = Relation("x", terms, True).text().split(" = ", 1)[1]
                bits.append(f"+ ({expr}){tpart}")
            else:
                mono, c = terms[0]
                body = "*".join(
                    f"({n})^{e}" if e > 1 else f"({n})" for n, e in mono
                )
                mag = abs(c)
                piece = body if mag == 1 and body else (
                    f"{mag}*{body}" if body else str(mag)
                )
                bits.append(("- " if c < 0 else "+ ") + piece + tpart)
        return "chi(t) = " + " ".join(bits)


def char_poly(data, rep):
    """Characteristic polynomial coefficients, reduced to defining primitives.

    Newton's identities run in generator space: each power sum is first
    reduced to the free basis, so no large gamma-space elementary symmetric
    polynomials are ever formed.
    """
    if rep == "defining":
        lam = defining_weight(data)
    elif rep == "adjoint":
        lam = data.highest_root
    else:
        raise ValueError("rep must be 'defining' or 'adjoint'")
    ws = reps.weight_system(data, lam)
    d = ws.dim
    gens = generators(data, "defining")
    names = gens.names()
    nv = len(names)
    deg_of = [g.degree for g in gens.items]
    name_index = {g.name: i for i, g in enumerate(gens.items)}

    def unit(i):
        e = [0] * nv
        e[i] = 1
        return SparsePoly.monomial(nv, e)

    # Power sums of the representation written in generator space.
    p_gen = {}
    for i in range(1, d + 1):
        p = power_sum(ws, i)
        if p.is_zero():
            p_gen[i] = SparsePoly.zero(nv)
            continue
        if rep == "defining" and f"trA^{i}" in name_index:
            p_gen[i] = unit(name_index[f"trA^{i}"])
            continue
        got = _reduce_poly(data, p, i, gens)
        if got is None:
            raise InternalInconsistency(f"power sum {i} did not reduce")
        sol, exps = got
        acc = SparsePoly.zero(nv)
        for e, c in zip(exps, sol.coefficients):
            if c:
                acc = acc + SparsePoly.monomial(nv, e, c)
        p_gen[i] = acc

    # Newton: e_k = (1/k) sum_{i=1..k} (-1)^(i-1) e_{k-i} p_i.
    e = [SparsePoly.constant(nv, 1)]
    for k in range(1, d + 1):
        acc = SparsePoly.zero(nv)
        for i in range(1, k + 1):
            if p_gen[i].is_zero():
                continue
            term = e[k - i] * p_gen[i]
            acc = acc + (term if i % 2 else -term)
        e.append(acc.scaled(Fraction(1, k)))

    # Monic characteristic polynomial: coefficient of t^(d-k) is (-1)^k e_k.
    coeffs = {}
    pf_rank = gens.pf_parity_rank
    for k in range(1, d + 1):
        ek = e[k]
        if ek.is_zero():
            continue
        sign = (-1) ** k
        terms = []
        for exp in sorted(ek.terms, key=lambda t: t, reverse=True):
            c = Fraction(ek.terms[exp]) * sign
            mono = []
            for name, kk in zip(names, exp):
                if not kk:
                    continue
                if name == "pf":
                    if kk % 2:
                        raise InternalInconsistency("odd Pfaffian power in char poly")
                    c *= Fraction((-1) ** pf_rank) ** (kk // 2)
                    mono.append(("detA", kk // 2))
                else:
                    mono.append((name, kk))
            terms.append((tuple(mono), c))
        coeffs[d - k] = tuple(terms)
    return CharPoly(rep=rep, degree=d, coefficients=coeffs)


def substitute(relation_terms, poly_map, nvars):
    """Materialize Relation-style terms back into gamma space (for checks)."""
    acc = SparsePoly.zero(nvars)
    for mono, c in relation_terms:
        part = SparsePoly.constant(nvars, c)
        for name, e in mono:
            part = part * (poly_map[name] ** e)
        acc = acc + part
    return acc


def generator_poly_map(data, gens):
    """Name -> polynomial map including 'detA' for the D series."""
    m = gens.poly_map()
    if "pf" in m:
        det, _pf = det_invariant(data)
        m = dict(m)
        m["detA"] = det
    return m
