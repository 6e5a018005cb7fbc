"""Simple Lie algebra catalog: Cartan matrices, root data, normalized form.

Everything downstream is derived from the Cartan matrix alone.  Conventions:
the Cartan matrix A has A[i][j] = 2(a_i, a_j)/(a_j, a_j), so row i is the
i-th simple root written in Dynkin labels.  Weights are plain integer tuples
of Dynkin labels throughout.  The invariant form is normalized so that the
adjoint representation has quadratic Casimir eigenvalue 1.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import InvalidAlgebra, NonDominant

_RANK_RANGE = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (3, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}


class AlgebraId:
    """Classification label: series letter plus rank."""

    __slots__ = ("series", "rank")

    def __init__(self, series, rank):
        series = series.upper()
        lo, hi = _RANK_RANGE.get(series, (None, None))
        if lo is None or rank < lo or (hi is not None and rank > hi):
            raise InvalidAlgebra(f"no simple Lie algebra {series}{rank}")
        self.series = series
        self.rank = rank

    def __eq__(self, other):
        return (
            isinstance(other, AlgebraId)
            and self.series == other.series
            and self.rank == other.rank
        )

    def __hash__(self):
        return hash((self.series, self.rank))

    def __repr__(self):
        return f"AlgebraId({self.series}{self.rank})"

    def __str__(self):
        return f"{self.series.lower()}{self.rank}"


def parse_algebra(name):
    """Parse 'a2', 'B3', 'su3', 'so7', 'sp4', 'g2', ... into an AlgebraId."""
    s = name.strip().lower()
    for prefix in ("su", "so", "sp"):
        if s.startswith(prefix) and s[len(prefix):].isdigit():
            n = int(s[len(prefix):])
            if prefix == "su":
                if n < 2:
                    raise InvalidAlgebra(f"su({n}) is not simple")
                return AlgebraId("A", n - 1)
            if prefix == "so":
                if n % 2:
                    return AlgebraId("B", (n - 1) // 2)
                return AlgebraId("D", n // 2)
            if n % 2:
                raise InvalidAlgebra(f"sp({n}) needs even n")
            return AlgebraId("C", n // 2)
    if len(s) >= 2 and s[0] in "abcdefg" and s[1:].isdigit():
        return AlgebraId(s[0].upper(), int(s[1:]))
    raise InvalidAlgebra(f"cannot parse algebra name {name!r}")


def cartan_matrix(series, rank):
    """Cartan matrix with rows = simple roots in Dynkin labels."""
    n = rank
    m = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def bond(i, j, aij=-1, aji=-1):
        m[i][j] = aij
        m[j][i] = aji

    if series in ("A", "B", "C"):
        for i in range(n - 1):
            bond(i, i + 1)
        if series == "B" and n >= 2:
            bond(n - 2, n - 1, -2, -1)
        if series == "C" and n >= 2:
            bond(n - 2, n - 1, -1, -2)
    elif series == "D":
        for i in range(n - 2):
            bond(i, i + 1)
        bond(n - 3, n - 1)
    elif series == "E":
        # Chain 1..n-1 with node n attached to chain position 3; this makes
        # the 27 of e6 come out as (1,0,0,0,0,0) and the adjoint as Lambda_6.
        for i in range(n - 2):
            bond(i, i + 1)
        bond(2, n - 1)
    elif series == "F":
        bond(0, 1)
        bond(1, 2, -2, -1)
        bond(2, 3)
    elif series == "G":
        bond(0, 1, -3, -1)
    return tuple(tuple(row) for row in m)


def _symmetrizer(A):
    """Smallest positive integers d with d_i A_ij = d_j A_ji."""
    n = len(A)
    d = [None] * n
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if i != j and A[i][j] and d[j] is None:
                d[j] = d[i] * A[i][j] / A[j][i]
                stack.append(j)
    den = 1
    for x in d:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in d]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return tuple(x // g for x in ints)


def _invert(A):
    """Exact inverse of an integer matrix, as Fractions."""
    n = len(A)
    m = [[Fraction(A[i][j]) for j in range(n)] + [Fraction(i == j) for j in range(n)]
         for i in range(n)]
    for c in range(n):
        p = next(r for r in range(c, n) if m[r][c])
        m[c], m[p] = m[p], m[c]
        piv = m[c][c]
        m[c] = [x / piv for x in m[c]]
        for r in range(n):
            if r != c and m[r][c]:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return tuple(tuple(row[n:]) for row in m)


def _primitive_degrees(series, rank):
    n = rank
    if series == "A":
        return tuple(range(2, n + 2))
    if series in ("B", "C"):
        return tuple(range(2, 2 * n + 1, 2))
    if series == "D":
        return tuple(range(2, 2 * n - 1, 2)) + (n,)
    if series == "E":
        return {6: (2, 5, 6, 8, 9, 12),
                7: (2, 6, 8, 10, 12, 14, 18),
                8: (2, 8, 12, 14, 18, 20, 24, 30)}[n]
    if series == "F":
        return (2, 6, 8, 12)
    return (2, 6)  # G


class AlgebraData:
    """All root-space data for one simple Lie algebra, exact and immutable."""

    def __init__(self, algebra_id):
        self.id = algebra_id
        l = algebra_id.rank
        self.rank = l
        A = cartan_matrix(algebra_id.series, l)
        self.cartan_matrix = A
        self.symmetrizer = _symmetrizer(A)
        self.inverse_cartan = _invert(A)
        self.primitive_degrees = _primitive_degrees(algebra_id.series, l)
        self.weyl_vector = (1,) * l

        # Root half-lengths: inversely proportional to the symmetrizer,
        # scaled to smallest positive integers.
        d = self.symmetrizer
        num = 1
        for x in d:
            num = num * x // gcd(num, x)
        e = [num // x for x in d]
        g = 0
        for x in e:
            g = gcd(g, x)
        self._lengths = tuple(x // g for x in e)

        det = self._det(A)
        self._det_cartan = det
        # Integer Gram matrix: det(A) * A^{-1} * diag(lengths); the common
        # scale sigma divides out of every Casimir/inner-product ratio.
        Ainv = self.inverse_cartan
        G = [[int(Ainv[i][j] * det) * self._lengths[j] for j in range(l)]
             for i in range(l)]
        self._gram_int = tuple(tuple(row) for row in G)
        self._sigma = det

        self.positive_roots = self._enumerate_positive_roots()
        self.highest_root = max(self.positive_roots, key=self._height_key)
        if not self.is_dominant(self.highest_root):
            raise InvalidAlgebra("internal: highest root not dominant")
        self.dim_adjoint = 2 * len(self.positive_roots) + l

        theta = self.highest_root
        shifted = tuple(x + 2 for x in theta)  # theta + 2*delta
        self._adjoint_norm_scaled = self._dot_scaled(theta, shifted)
        self.form_norm = Fraction(self._sigma, self._adjoint_norm_scaled)
        # Per-root scaled form vectors, reused by Freudenthal and Weyl.
        self._root_forms = {
            a: tuple(sum(G[i][j] * a[j] for j in range(l)) for i in range(l))
            for a in self.positive_roots
        }
        self._ws_cache = {}

    @staticmethod
    def _det(A):
        n = len(A)
        m = [list(map(Fraction, row)) for row in A]
        det = Fraction(1)
        for c in range(n):
            p = next(r for r in range(c, n) if m[r][c])
            if p != c:
                m[c], m[p] = m[p], m[c]
                det = -det
            det *= m[c][c]
            inv = 1 / m[c][c]
            for r in range(c + 1, n):
                if m[r][c]:
                    f = m[r][c] * inv
                    m[r] = [x - f * y for x, y in zip(m[r], m[c])]
        assert det.denominator == 1
        return int(det)

    def _dot_scaled(self, a, b):
        G = self._gram_int
        l = self.rank
        return sum(a[i] * sum(G[i][j] * b[j] for j in range(l)) for i in range(l))

    def _height_key(self, root):
        coords = self.alpha_coords(root)
        return (sum(coords), root)

    def alpha_coords(self, vec):
        """Coordinates of a root-lattice vector in the simple-root basis."""
        l = self.rank
        Ainv = self.inverse_cartan
        return tuple(
            sum(vec[i] * Ainv[i][j] for i in range(l)) for j in range(l)
        )

    def _enumerate_positive_roots(self):
        A = self.cartan_matrix
        l = self.rank
        simple = [tuple(A[i]) for i in range(l)]
        levels = [set(simple)]
        roots = set(simple)
        while levels[-1]:
            nxt = set()
            for beta in levels[-1]:
                for i in range(l):
                    # alpha_i-string through beta: beta + alpha_i is a root
                    # iff (steps down) - <beta, alpha_i^vee> >= 1.
                    q = 0
                    cur = beta
                    while True:
                        cur = tuple(x - y for x, y in zip(cur, simple[i]))
                        if cur not in roots:
                            break
                        q += 1
                    if q - beta[i] >= 1:
                        cand = tuple(x + y for x, y in zip(beta, simple[i]))
                        if cand not in roots:
                            nxt.add(cand)
            roots.update(nxt)
            levels.append(nxt)
        return tuple(sorted(roots, key=self._height_key))

    # -- weight helpers -------------------------------------------------

    def is_dominant(self, weight):
        return all(x >= 0 for x in weight)

    def check_rank(self, weight):
        if len(weight) != self.rank:
            raise NonDominant(f"weight {weight} has wrong rank for {self.id}")

    def reflect(self, weight, i):
        """Simple reflection s_i in Dynkin labels."""
        c = weight[i]
        row = self.cartan_matrix[i]
        return tuple(x - c * y for x, y in zip(weight, row))

    def dominant_rep(self, weight):
        """Dominant Weyl-orbit representative (plain, unshifted action)."""
        v = list(weight)
        A = self.cartan_matrix
        l = self.rank
        while True:
            for i in range(l):
                if v[i] < 0:
                    c = v[i]
                    row = A[i]
                    for j in range(l):
                        v[j] -= c * row[j]
                    break
            else:
                return tuple(v)

    # -- the invariant form ---------------------------------------------

    def inner_product(self, lam, mu):
        """Normalized form: <theta, theta + 2 delta> = 1."""
        return Fraction(self._dot_scaled(lam, mu), self._adjoint_norm_scaled)

    def casimir(self, lam):
        """<lam, lam + 2 delta> under the normalized form."""
        self.check_rank(lam)
        if not self.is_dominant(lam):
            raise NonDominant(f"{lam} is not dominant")
        shifted = tuple(x + 2 for x in lam)
        return Fraction(self._dot_scaled(lam, shifted), self._adjoint_norm_scaled)


@lru_cache(maxsize=None)
def _algebra_data_cached(series, rank):
    return AlgebraData(AlgebraId(series, rank))


def algebra_data(algebra_id):
    """Build (and cache) the full derived dataset for a classification label."""
    if isinstance(algebra_id, str):
        algebra_id = parse_algebra(algebra_id)
    return _algebra_data_cached(algebra_id.series, algebra_id.rank)


def inner_product(data, lam, mu):
    return data.inner_product(lam, mu)


def casimir(data, lam):
    return data.casimir(lam)
