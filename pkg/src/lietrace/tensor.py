"""Tensor products and the symmetric/antisymmetric square of a representation.

General products use the Racah-Speiser (Klimyk) shift-and-reflect rule; the
square split works directly on the S^2/Lambda^2 weight multisets and peels
off irreps from the top, which is what distinguishes the two symmetry parts.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from . import reps
from .errors import InternalInconsistency, NonDominant


@dataclass(frozen=True)
class Decomposition:
    parts: tuple  # ((weight, multiplicity), ...) sorted by (dim, grlex)

    def multiset(self):
        return dict(self.parts)


@dataclass(frozen=True)
class SquareSplit:
    sym: Decomposition
    alt: Decomposition


@dataclass(frozen=True)
class TableRow:
    weight: tuple
    space: str  # "sym" | "alt"
    dim: int
    casimir: Fraction
    l_eigenvalue: Fraction


def _sorted_parts(data, counter):
    items = [(w, m) for w, m in counter.items() if m]
    items.sort(key=lambda wm: (reps.dimension(data, wm[0]), sum(wm[0]), wm[0]))
    return tuple(items)


def tensor_decompose(data, lam1, lam2):
    """Decompose V_lam1 (x) V_lam2 by the Klimyk rule."""
    for lam in (lam1, lam2):
        data.check_rank(lam)
        if not data.is_dominant(lam):
            raise NonDominant(f"{lam} is not dominant")
    lam1, lam2 = tuple(lam1), tuple(lam2)
    if reps.dimension(data, lam1) > reps.dimension(data, lam2):
        lam1, lam2 = lam2, lam1
    ws = reps.weight_system(data, lam1)
    acc = Counter()
    for mu, m in ws.entries.items():
        shifted = tuple(a + b for a, b in zip(lam2, mu))
        dom, sign = reps.to_dominant(data, shifted)
        if sign:
            acc[dom] += m * sign
    for w, m in acc.items():
        if m < 0:
            raise InternalInconsistency(f"negative multiplicity at {w}")
    parts = _sorted_parts(data, acc)
    total = sum(m * reps.dimension(data, w) for w, m in parts)
    if total != ws.dim * reps.dimension(data, lam2):
        raise InternalInconsistency("tensor product dimensions do not add up")
    return Decomposition(parts)


def _peel(data, counter):
    """Decompose a Weyl-invariant weight multiset by top-down subtraction."""
    counter = Counter({w: m for w, m in counter.items() if m})
    parts = Counter()
    while counter:
        top = max(counter, key=lambda w: (sum(data.alpha_coords(w)), w))
        c = counter[top]
        if c < 0 or not data.is_dominant(top):
            raise InternalInconsistency(f"peeling failed at {top} (mult {c})")
        ws = reps.weight_system(data, top)
        for mu, m in ws.entries.items():
            new = counter[mu] - c * m
            if new < 0:
                raise InternalInconsistency(f"peeling drove {mu} negative")
            if new:
                counter[mu] = new
            else:
                del counter[mu]
        parts[top] += c
    return parts


def square_split(data, lam):
    """Weight-multiset split of V (x) V into S^2 V and Lambda^2 V, decomposed."""
    data.check_rank(lam)
    if not data.is_dominant(lam):
        raise NonDominant(f"{lam} is not dominant")
    ws = reps.weight_system(data, tuple(lam))
    items = list(ws.entries.items())
    sym = Counter()
    alt = Counter()
    for idx, (mu, m) in enumerate(items):
        double = tuple(2 * x for x in mu)
        sym[double] += m * (m + 1) // 2
        alt[double] += m * (m - 1) // 2
        for nu, mn in items[idx + 1:]:
            s = tuple(a + b for a, b in zip(mu, nu))
            c = m * mn
            sym[s] += c
            alt[s] += c
    d = ws.dim
    split = SquareSplit(
        sym=Decomposition(_sorted_parts(data, _peel(data, sym))),
        alt=Decomposition(_sorted_parts(data, _peel(data, alt))),
    )
    dim_sym = sum(m * reps.dimension(data, w) for w, m in split.sym.parts)
    dim_alt = sum(m * reps.dimension(data, w) for w, m in split.alt.parts)
    if dim_sym != d * (d + 1) // 2 or dim_alt != d * (d - 1) // 2:
        raise InternalInconsistency("square split dimensions do not add up")
    return split


def adjoint_square_table(data):
    """Rows (weight, sym/alt, dim, C, L) for the adjoint tensor square."""
    split = square_split(data, data.highest_root)
    rows = []
    for space, deco in (("sym", split.sym), ("alt", split.alt)):
        for w, m in deco.parts:
            c = data.casimir(w)
            row = TableRow(
                weight=w,
                space=space,
                dim=reps.dimension(data, w),
                casimir=c,
                l_eigenvalue=c / 2 - 1,
            )
            rows.extend([row] * m)
    rows.sort(key=lambda r: (r.space != "sym", r.dim, sum(r.weight), r.weight))
    return tuple(rows)
