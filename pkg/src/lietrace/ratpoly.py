"""Sparse multivariate polynomials with exact rational coefficients.

Coefficients are Python ints or ``fractions.Fraction``; the two mix freely
and nothing in this module ever touches floating point.  Exponent vectors
are dense tuples (the ranks in play never exceed 8).  Linear systems over
the monomial coefficient matrix are solved by fraction-free (Bareiss)
elimination, so exactness is structural rather than a matter of tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm


class SparsePoly:
    """Polynomial in ``nvars`` variables, stored as {exponent tuple: coefficient}.

    Zero coefficients are never stored.  Instances are immutable by
    convention; all arithmetic returns new objects.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        clean = {}
        if terms:
            for exp, c in terms.items():
                if c:
                    if len(exp) != nvars:
                        raise ValueError("exponent vector has wrong length")
                    clean[exp] = c
        self.terms = clean

    @classmethod
    def zero(cls, nvars):
        return cls(nvars)

    @classmethod
    def constant(cls, nvars, c):
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, nvars, exp, c=1):
        return cls(nvars, {tuple(exp): c})

    @classmethod
    def linear_form(cls, coeffs):
        """The form sum_i coeffs[i] * x_i."""
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            if c:
                e = [0] * n
                e[i] = 1
                terms[tuple(e)] = c
        return cls(n, terms)

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __neg__(self):
        return SparsePoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __add__(self, other):
        if not isinstance(other, SparsePoly):
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        p = SparsePoly.__new__(SparsePoly)
        p.nvars = self.nvars
        p.terms = out
        return p

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scaled(other)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        p = SparsePoly.__new__(SparsePoly)
        p.nvars = self.nvars
        p.terms = out
        return p

    __rmul__ = __mul__

    def scaled(self, c):
        if not c:
            return SparsePoly(self.nvars)
        return SparsePoly(self.nvars, {e: c * v for e, v in self.terms.items()})

    def __pow__(self, k):
        return poly_pow(self, k)

    def total_degree(self):
        """Max term degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self):
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def evaluate(self, values):
        total = 0
        for e, c in self.terms.items():
            v = c
            for x, k in zip(values, e):
                if k:
                    v = v * x**k
            total += v
        return total

    def __repr__(self):
        if not self.terms:
            return "SparsePoly(0)"
        bits = []
        for e in sorted(self.terms, key=grlex_key, reverse=True):
            mono = "*".join(
                f"x{i}^{k}" if k > 1 else f"x{i}" for i, k in enumerate(e) if k
            )
            c = self.terms[e]
            bits.append(f"{c}" if not mono else f"{c}*{mono}")
        return "SparsePoly(" + " + ".join(bits) + ")"


def grlex_key(exp):
    """Graded-lexicographic sort key for exponent tuples."""
    return (sum(exp), exp)


def poly_pow(p, k):
    """p**k by binary exponentiation; p**0 is the constant 1."""
    if k < 0:
        raise ValueError("negative exponent")
    result = SparsePoly.constant(p.nvars, 1)
    base = p
    while k:
        if k & 1:
            result = result * base
        base = base * base if k > 1 else base
        k >>= 1
    return result


@dataclass(frozen=True)
class LinearSystem:
    """Express ``target`` as a rational combination of ``columns``.

    All columns and the target must be homogeneous of one degree in the
    same variables (the invariant-theory use case; enforced at solve time).
    """

    columns: tuple
    target: SparsePoly


@dataclass(frozen=True)
class Solution:
    coefficients: tuple  # one Fraction per column
    kernel_dim: int

    @property
    def unique(self):
        return self.kernel_dim == 0


def _int_scale(poly):
    """Return (denominator-clearing factor, integer coefficient map)."""
    den = 1
    for c in poly.terms.values():
        if isinstance(c, Fraction) and c.denominator != 1:
            den = lcm(den, c.denominator)
    if den == 1:
        return 1, {e: int(c) for e, c in poly.terms.items()}
    return den, {e: int(c * den) for e, c in poly.terms.items()}


def solve_exact(system):
    """Exact solve of ``target = sum_i x_i * columns[i]`` coefficient-wise.

    Returns a canonical ``Solution`` (reduced echelon over the given column
    order, free variables 0, kernel dimension attached), or None when the
    target is outside the column span.  Elimination is fraction-free over
    scaled integer rows, so no rounding can occur.
    """
    cols = list(system.columns)
    target = system.target
    ncols = len(cols)
    degs = {p.total_degree() for p in cols if not p.is_zero()}
    if not target.is_zero():
        degs.add(target.total_degree())
    if len(degs) > 1 or any(not p.is_homogeneous() for p in [*cols, target]):
        raise ValueError("columns and target must be homogeneous of one degree")

    scales = []
    int_cols = []
    for p in cols:
        s, t = _int_scale(p)
        scales.append(s)
        int_cols.append(t)
    t_scale, t_terms = _int_scale(target)

    monomials = set(t_terms)
    for t in int_cols:
        monomials.update(t)
    monomials = sorted(monomials, key=grlex_key, reverse=True)
    # Augmented integer matrix: one row per monomial, last column = target.
    rows = []
    for mono in monomials:
        row = [t.get(mono, 0) for t in int_cols]
        row.append(t_terms.get(mono, 0))
        rows.append(row)
    if not rows:
        return Solution((Fraction(0),) * ncols, ncols)

    # Fraction-free forward elimination (Bareiss, one-step).
    nrows = len(rows)
    pivot_cols = []
    prev = 1
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, nrows) if rows[i][c]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        piv = rows[r][c]
        rr = rows[r]
        for i in range(r + 1, nrows):
            ri = rows[i]
            fi = ri[c]
            for j in range(c, ncols + 1):
                ri[j] = (ri[j] * piv - fi * rr[j]) // prev
        prev = piv
        pivot_cols.append(c)
        r += 1

    rank = len(pivot_cols)
    # Consistency: rows below the last pivot are zero in every column, so a
    # nonzero target entry there means the target is outside the span.
    for i in range(rank, nrows):
        if rows[i][ncols]:
            return None

    # Back-substitute over the echelon rows; free variables stay 0.
    coeffs = [Fraction(0)] * ncols
    for k in range(rank - 1, -1, -1):
        c = pivot_cols[k]
        row = rows[k]
        s = Fraction(row[ncols])
        for j in range(c + 1, ncols):
            if row[j] and coeffs[j]:
                s -= row[j] * coeffs[j]
        coeffs[c] = s / row[c]
    # Undo the per-column/target integer scaling.
    for c in range(ncols):
        coeffs[c] = coeffs[c] * scales[c] / t_scale

    return Solution(tuple(coeffs), ncols - rank)
