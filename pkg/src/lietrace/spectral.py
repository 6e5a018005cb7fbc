"""Spectral calculus on the adjoint tensor square.

Operators are represented by their eigenvalue vectors over the irreducible
components, which is all the derivations need: the minimal-equation
identity for the split-Casimir operator, Lagrange-interpolated projectors,
and their rendering as structure-constant index identities in each family's
normalization conventions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import tensor
from .errors import DegenerateSpectrum, UnknownIrrep, UnsupportedFamily
from .ratpoly import LinearSystem, SparsePoly, solve_exact


@dataclass(frozen=True)
class SpectrumRow:
    weight: tuple
    space: str  # "sym" | "alt"
    dim: int
    casimir: Fraction
    l_eigenvalue: Fraction
    known: bool


@dataclass(frozen=True)
class SpectrumTable:
    algebra: str
    rows: tuple

    def sym_rows(self):
        return [r for r in self.rows if r.space == "sym"]

    def alt_rows(self):
        return [r for r in self.rows if r.space == "alt"]

    def find(self, weight, space):
        for r in self.rows:
            if r.weight == tuple(weight) and r.space == space:
                return r
        raise UnknownIrrep(f"{weight} ({space}) not in the adjoint square")


# Term keys in operator expressions:
#   ("unit", space)        the identity restricted to sym/alt
#   ("L", (j, space))      j-th power of the split-Casimir operator, restricted
#   ("proj", (weight, space))   a known projector
@dataclass(frozen=True)
class SpectralIdentity:
    power: int
    subspace: str  # "sym" | "full"
    terms: tuple  # ((kind, payload), Fraction)


@dataclass(frozen=True)
class ProjectorExpr:
    target: tuple  # (weight, space)
    terms: tuple


def default_known(data):
    """Which projectors the per-family conventions treat as initially known."""
    series = data.id.series
    l = data.rank
    known = {((0,) * l, "sym"), (data.highest_root, "alt")}
    if series == "A" and l >= 2:
        known.add((data.highest_root, "sym"))
    elif series in ("B", "D"):
        w = [0] * l
        w[0] = 2
        known.add((tuple(w), "sym"))
    elif series == "C":
        w = [0] * l
        w[1] = 1
        known.add((tuple(w), "sym"))
    return known


def spectrum_table(data, known=None):
    """Adjoint-square component table with known/unknown projector flags."""
    if known is None:
        known = default_known(data)
    else:
        known = {(tuple(w), s) for w, s in known}
    rows = tensor.adjoint_square_table(data)
    present = {(r.weight, r.space) for r in rows}
    for item in known:
        if item not in present:
            raise UnknownIrrep(f"{item} is not a component of the adjoint square")
    out = tuple(
        SpectrumRow(
            weight=r.weight,
            space=r.space,
            dim=r.dim,
            casimir=r.casimir,
            l_eigenvalue=r.l_eigenvalue,
            known=(r.weight, r.space) in known,
        )
        for r in rows
    )
    return SpectrumTable(algebra=str(data.id), rows=out)


def _check_distinct(rows, space):
    by_eig = {}
    for r in rows:
        by_eig.setdefault(r.l_eigenvalue, []).append(r)
    clashes = [grp for grp in by_eig.values() if len(grp) > 1]
    if clashes:
        pairs = [tuple((r.weight, r.space) for r in grp) for grp in clashes]
        raise DegenerateSpectrum(
            f"unknown {space} components share an eigenvalue: "
            + "; ".join(str(p) for p in pairs),
            pairs=pairs,
        )


def reduce_L_power(table, power=None):
    """Express L^u on the symmetric subspace through lower powers and knowns.

    u defaults to the number of unknown symmetric components (the minimal
    choice); larger powers are reduced recursively.  Solved exactly as an
    eigenvalue-vector linear system.
    """
    sym = table.sym_rows()
    unknown = [r for r in sym if not r.known]
    _check_distinct(unknown, "sym")
    u = len(unknown)
    if u < 1:
        raise UnknownIrrep("no unknown symmetric components to solve for")
    if power is None:
        power = u
    if power < u:
        raise ValueError(f"L^{power} does not reduce; minimal power is {u}")

    nrows = len(sym)

    def vec(values):
        return SparsePoly.linear_form(values)

    columns = []
    keys = []
    for j in range(power):
        columns.append(vec([r.l_eigenvalue**j for r in sym]))
        keys.append(("unit", "sym") if j == 0 else ("L", (j, "sym")))
    for r in sym:
        if r.known:
            columns.append(vec([Fraction(s is r) for s in sym]))
            keys.append(("proj", (r.weight, "sym")))
    target = vec([r.l_eigenvalue**power for r in sym])
    sol = solve_exact(LinearSystem(tuple(columns), target))
    if sol is None or (power == u and not sol.unique):
        raise DegenerateSpectrum("eigenvalue system is singular")
    terms = tuple(
        (k, Fraction(c)) for k, c in zip(keys, sol.coefficients) if c
    )
    return SpectralIdentity(power=power, subspace="sym", terms=terms)


def full_space_identity(table, power=None):
    """The L^u identity on the whole square, folding the antisymmetric side
    through the Jacobi identity L|alt = -1/2 P[adjoint,alt]."""
    ident = reduce_L_power(table, power)
    u = ident.power
    # L^u restricted to alt equals (-1/2)^(u-1) * L|alt.
    alt_coeff = Fraction(-1, 2) ** (u - 1)
    terms = ident.terms + ((("L", (1, "alt")), alt_coeff),)
    return SpectralIdentity(power=u, subspace="full", terms=terms)


def projector_expr(table, weight, space):
    """Lagrange projector onto one unknown component, degree <= u-1 in L."""
    row = table.find(weight, space)
    if row.known:
        return ProjectorExpr(
            target=(row.weight, space),
            terms=((("proj", (row.weight, space)), Fraction(1)),),
        )
    rows = table.sym_rows() if space == "sym" else table.alt_rows()
    unknown = [r for r in rows if not r.known]
    _check_distinct(unknown, space)
    # g(x) = prod_{other unknowns} (x - l_i) / (l_t - l_i), expanded.
    coeffs = [Fraction(1)]  # ascending powers of x
    denom = Fraction(1)
    for r in unknown:
        if r is row:
            continue
        li = r.l_eigenvalue
        denom *= row.l_eigenvalue - li
        coeffs = [0] + coeffs
        for i in range(len(coeffs) - 1):
            coeffs[i] -= li * coeffs[i + 1]
    coeffs = [c / denom for c in coeffs]
    # P = g(L) (1_X - sum of known projectors in X).
    terms = []
    for j, c in enumerate(coeffs):
        if c:
            key = ("unit", space) if j == 0 else ("L", (j, space))
            terms.append((key, Fraction(c)))
    for r in rows:
        if r.known:
            g_at = sum(
                c * r.l_eigenvalue**j for j, c in enumerate(coeffs)
            )
            if g_at:
                terms.append((("proj", (r.weight, r.space)), -Fraction(g_at)))
    return ProjectorExpr(target=(row.weight, space), terms=tuple(terms))


def eval_term_on_row(table, key, row):
    """Eigenvalue of one operator term on one component (the spectral test)."""
    kind, payload = key
    if kind == "unit":
        return Fraction(row.space == payload)
    if kind == "L":
        j, space = payload
        if row.space != space:
            return Fraction(0)
        return row.l_eigenvalue**j
    if kind == "proj":
        w, s = payload
        return Fraction(row.weight == tuple(w) and row.space == s)
    raise ValueError(f"unknown term kind {kind!r}")


def eval_terms_on_row(table, terms, row):
    return sum((c * eval_term_on_row(table, k, row) for k, c in terms),
               Fraction(0))


def identity_holds(table, ident):
    """Spectral test: both sides agree on every component of the square."""
    for row in table.rows:
        if ident.subspace == "sym":
            lhs = row.l_eigenvalue**ident.power if row.space == "sym" else Fraction(0)
        else:
            lhs = row.l_eigenvalue**ident.power
        if lhs != eval_terms_on_row(table, ident.terms, row):
            return False
    return True


def antisym_minimal_check(table):
    """True iff every antisymmetric component satisfies l(l + 1/2) = 0."""
    return all(
        r.l_eigenvalue * (r.l_eigenvalue + Fraction(1, 2)) == 0
        for r in table.alt_rows()
    )


# ---------------------------------------------------------------------------
# Index-notation emission
# ---------------------------------------------------------------------------

# Index structures over four free indices j,k,p,q (ASCII names used in text):
#   unit_sym    delta[j,p]delta[k,q] + delta[j,q]delta[k,p]
#   unit_alt    delta[j,p]delta[k,q] - delta[j,q]delta[k,p]
#   delta_pair  delta[j,k]delta[p,q]
#   dd          d[j,k,r]d[p,q,r]   (third index over the partner range)
#   cc1         c[j,p,r]c[k,q,r]
#   cc2         c[j,q,r]c[k,p,r]
#   cc_adj      c[j,k,r]c[p,q,r]
#   cccc        c[j,m,r]c[k,n,r]c[m,p,s]c[n,q,s]


@dataclass(frozen=True)
class FamilyConventions:
    family: str  # "su" | "so" | "sp" | "g2" | "f4" | "e6"
    n: int  # matrix size of the defining rep (su/so) or 2l (sp); 0 otherwise
    tensor: str  # letter used for the structure constants
    s2: Fraction  # squared scale between Killing-normalized and family tensors
    dim_adjoint: int
    dd_norm: Fraction | None  # known d-projector normalization, or None
    dd_weight: tuple | None
    adj_norm: Fraction  # P[adjoint, alt] = adj_norm * cc_adj
    fold_alt_into_adj: bool  # render L|alt via cc_adj (A series) or cc1/cc2
    # tr A^2 = a.a / tau and sum_r D_r^2 = dd_p * trA^4 + dd_q * (trA^2)^2,
    # the contraction dictionary used to derive trace relations.
    tau: Fraction | None = None
    dd_p: Fraction | None = None
    dd_q: Fraction | None = None


def family_conventions(data):
    series = data.id.series
    l = data.rank
    dim = data.dim_adjoint
    if series == "A":
        if l < 2:
            raise UnsupportedFamily("su(2) has no symmetric d tensor")
        n = l + 1
        return FamilyConventions(
            family="su", n=n, tensor="f", s2=Fraction(n), dim_adjoint=dim,
            dd_norm=Fraction(n, n * n - 4), dd_weight=data.highest_root,
            adj_norm=Fraction(1, n), fold_alt_into_adj=True,
            tau=Fraction(2), dd_p=Fraction(8), dd_q=Fraction(-8, n),
        )
    if series in ("B", "D"):
        n = 2 * l + 1 if series == "B" else 2 * l
        w = [0] * l
        w[0] = 2
        return FamilyConventions(
            family="so", n=n, tensor="c", s2=Fraction(2 * (n - 2)),
            dim_adjoint=dim, dd_norm=Fraction(1, 2 * (n - 2)),
            dd_weight=tuple(w), adj_norm=Fraction(1, 2 * (n - 2)),
            fold_alt_into_adj=False,
            tau=Fraction(1, 2), dd_p=Fraction(2), dd_q=Fraction(-2, n),
        )
    if series == "C":
        n = l
        w = [0] * l
        w[1] = 1
        return FamilyConventions(
            family="sp", n=2 * n, tensor="c", s2=Fraction(4 * (n + 1)),
            dim_adjoint=dim, dd_norm=Fraction(1, 4 * (n + 1)),
            dd_weight=tuple(w), adj_norm=Fraction(1, 4 * (n + 1)),
            fold_alt_into_adj=False,
            tau=Fraction(1, 2), dd_p=Fraction(2), dd_q=Fraction(-1, n),
        )
    if series == "G":
        return FamilyConventions(
            family="g2", n=7, tensor="c", s2=Fraction(8), dim_adjoint=14,
            dd_norm=Fraction(9, 32), dd_weight=(0, 2),
            adj_norm=Fraction(1, 8), fold_alt_into_adj=False,
            tau=Fraction(1, 2),
        )
    if series == "F":
        return FamilyConventions(
            family="f4", n=26, tensor="C", s2=Fraction(1), dim_adjoint=52,
            dd_norm=None, dd_weight=None, adj_norm=Fraction(1),
            fold_alt_into_adj=False,
        )
    if series == "E" and l == 6:
        return FamilyConventions(
            family="e6", n=27, tensor="C", s2=Fraction(1), dim_adjoint=78,
            dd_norm=None, dd_weight=None, adj_norm=Fraction(1),
            fold_alt_into_adj=False,
        )
    raise UnsupportedFamily(f"no index conventions declared for {data.id}")


@dataclass(frozen=True)
class IndexIdentity:
    lhs: str  # structure key of the left-hand side
    rhs: dict  # structure key -> Fraction
    tensor: str
    family: str
    n: int

    def text(self):
        body = _terms_text(self.rhs, self.tensor)
        if self.lhs == "proj":
            return body
        return _struct_text(self.lhs, self.tensor) + " = " + body

    def latex(self):
        body = _terms_latex(self.rhs, self.tensor)
        if self.lhs == "proj":
            return body
        return _struct_latex(self.lhs, self.tensor) + " = " + body


_STRUCT_ORDER = ("unit_sym", "unit_alt", "delta_pair", "dd", "cc1", "cc2",
                 "cc_adj", "cc_sym", "cccc")


def _struct_text(key, t):
    table = {
        "unit_sym": "(delta[j,p]*delta[k,q] + delta[j,q]*delta[k,p])",
        "unit_alt": "(delta[j,p]*delta[k,q] - delta[j,q]*delta[k,p])",
        "delta_pair": "delta[j,k]*delta[p,q]",
        "dd": "d[j,k,r]*d[p,q,r]",
        "cc1": f"{t}[j,p,r]*{t}[k,q,r]",
        "cc2": f"{t}[j,q,r]*{t}[k,p,r]",
        "cc_adj": f"{t}[j,k,r]*{t}[p,q,r]",
        "cc_sym": f"({t}[j,p,r]*{t}[k,q,r] + {t}[j,q,r]*{t}[k,p,r])",
        "cccc": f"{t}[j,m,r]*{t}[k,n,r]*{t}[m,p,s]*{t}[n,q,s]",
    }
    return table[key]


def _struct_latex(key, t):
    table = {
        "unit_sym": r"(\delta_{jp}\delta_{kq} + \delta_{jq}\delta_{kp})",
        "unit_alt": r"(\delta_{jp}\delta_{kq} - \delta_{jq}\delta_{kp})",
        "delta_pair": r"\delta_{jk}\delta_{pq}",
        "dd": r"d_{jkr}d_{pqr}",
        "cc1": f"{t}_{{jpr}}{t}_{{kqr}}",
        "cc2": f"{t}_{{jqr}}{t}_{{kpr}}",
        "cc_adj": f"{t}_{{jkr}}{t}_{{pqr}}",
        "cc_sym": f"({t}_{{jpr}}{t}_{{kqr}} + {t}_{{jqr}}{t}_{{kpr}})",
        "cccc": f"{t}_{{jmr}}{t}_{{knr}}{t}_{{mps}}{t}_{{nqs}}",
    }
    return table[key]


def _terms_text(rhs, t):
    bits = []
    for key in _STRUCT_ORDER:
        if key not in rhs:
            continue
        c = rhs[key]
        mag = abs(c)
        body = _struct_text(key, t)
        piece = body if mag == 1 else f"{mag}*{body}"
        if not bits:
            bits.append(("-" if c < 0 else "") + piece)
        else:
            bits.append(("- " if c < 0 else "+ ") + piece)
    return " ".join(bits) if bits else "0"


def _terms_latex(rhs, t):
    bits = []
    for key in _STRUCT_ORDER:
        if key not in rhs:
            continue
        c = rhs[key]
        mag = abs(c)
        if mag == 1:
            coeff = ""
        elif mag.denominator == 1:
            coeff = str(mag)
        else:
            coeff = rf"\frac{{{mag.numerator}}}{{{mag.denominator}}}"
        piece = coeff + _struct_latex(key, t)
        if not bits:
            bits.append(("-" if c < 0 else "") + piece)
        else:
            bits.append(("- " if c < 0 else "+ ") + piece)
    return " ".join(bits) if bits else "0"


def _add(rhs, key, c):
    if not c:
        return
    new = rhs.get(key, Fraction(0)) + c
    if new:
        rhs[key] = new
    else:
        rhs.pop(key, None)


def emit_index_identity(data, ident, conv=None):
    """Render a spectral identity as a structure-constant index identity.

    The identity is rescaled so the left side is a bare product of the
    family's structure constants (the appendix display form).
    """
    if conv is None:
        conv = family_conventions(data)
    u = ident.power
    if u == 1:
        scale = -2 * conv.s2
        lhs = "cc_sym"
    elif u == 2:
        scale = conv.s2**2
        lhs = "cccc"
    else:
        raise UnsupportedFamily(f"no index rendering for L^{u}")
    rhs = {}
    for (kind, payload), c in ident.terms:
        c = c * scale
        if kind == "unit":
            if payload != "sym":
                raise UnsupportedFamily("unit_alt in a reduce-L identity")
            _add(rhs, "unit_sym", c / 2)
        elif kind == "L":
            j, space = payload
            if j != 1:
                raise UnsupportedFamily("only linear L terms are rendered")
            if space == "sym":
                _add(rhs, "cc1", -c / (2 * conv.s2))
                _add(rhs, "cc2", -c / (2 * conv.s2))
            elif conv.fold_alt_into_adj:
                # Jacobi: L|alt = -1/2 P[adjoint, alt].
                _add(rhs, "cc_adj", -c / 2 * conv.adj_norm)
            else:
                _add(rhs, "cc1", -c / (2 * conv.s2))
                _add(rhs, "cc2", c / (2 * conv.s2))
        elif kind == "proj":
            w, space = payload
            if space == "alt":
                _add(rhs, "cc_adj", c * conv.adj_norm)
            elif not any(w):
                _add(rhs, "delta_pair", c / conv.dim_adjoint)
            elif conv.dd_weight is not None and tuple(w) == conv.dd_weight:
                _add(rhs, "dd", c * conv.dd_norm)
            else:
                raise UnsupportedFamily(f"no index form for projector {payload}")
    return IndexIdentity(lhs=lhs, rhs=rhs, tensor=conv.tensor,
                         family=conv.family, n=conv.n)


def emit_projector(data, expr, conv=None):
    """Projector expression as an index combination (coefficients exact)."""
    if conv is None:
        conv = family_conventions(data)
    rhs = {}
    for (kind, payload), c in expr.terms:
        if kind == "unit":
            _add(rhs, "unit_sym" if payload == "sym" else "unit_alt", c / 2)
        elif kind == "L":
            j, space = payload
            if j != 1:
                raise UnsupportedFamily("only linear L terms are rendered")
            sgn = 1 if space == "sym" else -1
            _add(rhs, "cc1", -c / (2 * conv.s2))
            _add(rhs, "cc2", -sgn * c / (2 * conv.s2))
        elif kind == "proj":
            w, space = payload
            if space == "alt":
                _add(rhs, "cc_adj", c * conv.adj_norm)
            elif not any(w):
                _add(rhs, "delta_pair", c / conv.dim_adjoint)
            elif conv.dd_weight is not None and tuple(w) == conv.dd_weight:
                _add(rhs, "dd", c * conv.dd_norm)
            else:
                raise UnsupportedFamily(f"no index form for projector {payload}")
    return IndexIdentity(lhs="proj", rhs=rhs, tensor=conv.tensor,
                         family=conv.family, n=conv.n)


def trace_power4_relation(data):
    """tr F^4 derived from the spectral route, by contracting the emitted
    identity with four copies of a generic adjoint vector.

    Classical families return {"(trA^2)^2": c1, "trA^4": c2}; exceptional
    ones return {"(trF^2)^2": c}.
    """
    conv = family_conventions(data)
    table = spectrum_table(data)
    ident = full_space_identity(table, power=2)
    emitted = emit_index_identity(data, ident, conv)
    rhs = emitted.rhs
    # a.a = (1/tau) trA^2; cc terms vanish under total symmetrization.
    unit = rhs.get("unit_sym", Fraction(0))
    pair = rhs.get("delta_pair", Fraction(0))
    dd = rhs.get("dd", Fraction(0))
    if conv.family in ("f4", "e6", "g2"):
        c = (2 * unit + pair) / conv.s2**2
        return {"(trF^2)^2": c}
    tau = conv.tau
    c1 = (2 * unit + pair) * tau**2 + dd * conv.dd_q
    c2 = dd * conv.dd_p
    return {"(trA^2)^2": c1, "trA^4": c2}


def operator_term_text(key, coeff, first):
    kind, payload = key
    if kind == "unit":
        body = "1_S" if payload == "sym" else "1_A"
    elif kind == "L":
        j, space = payload
        lp = "L" if j == 1 else f"L^{j}"
        body = f"{lp}*1_{'S' if space == 'sym' else 'A'}"
    else:
        w, space = payload
        body = f"P[{','.join(map(str, w))};{'S' if space == 'sym' else 'A'}]"
    mag = abs(coeff)
    piece = body if mag == 1 else f"{mag}*{body}"
    if first:
        return ("-" if coeff < 0 else "") + piece
    return ("- " if coeff < 0 else "+ ") + piece


def identity_text(ident):
    lhs = f"L^{ident.power}" if ident.power > 1 else "L"
    lhs += "*1_S" if ident.subspace == "sym" else ""
    bits = [
        operator_term_text(k, c, i == 0) for i, (k, c) in enumerate(ident.terms)
    ]
    return f"{lhs} = " + " ".join(bits)


def projector_text(expr):
    w, space = expr.target
    lhs = f"P[{','.join(map(str, w))};{'S' if space == 'sym' else 'A'}]"
    bits = [
        operator_term_text(k, c, i == 0) for i, (k, c) in enumerate(expr.terms)
    ]
    return f"{lhs} = " + " ".join(bits)
