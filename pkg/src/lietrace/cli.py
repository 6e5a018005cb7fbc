"""Command-line front end: tables, trace relations, projectors, numeric checks.

Output formats: text (default), json (rationals as strings), latex (layout
convenience).  NoRelation and degenerate-spectrum findings are reported
in-band with exit 0; domain errors exit 1; usage errors exit 2.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import cartan, matreal, reps, spectral, tensor, traceid
from .errors import LieTraceError

DEFAULT_MAX_DEGREE = 14


def _max_degree_default():
    env = os.environ.get("LIETRACE_MAX_DEGREE")
    if env:
        try:
            return int(env)
        except ValueError:
            pass
    return DEFAULT_MAX_DEGREE


def _label_str(w):
    return "(" + ",".join(map(str, w)) + ")"


def _parse_labels(text, rank):
    s = text.strip().strip("()")
    parts = [p for p in s.replace(",", " ").split() if p]
    try:
        labels = tuple(int(p) for p in parts)
    except ValueError:
        raise LieTraceError(f"cannot parse weight labels {text!r}")
    if len(labels) != rank:
        raise LieTraceError(
            f"expected {rank} labels, got {len(labels)} in {text!r}"
        )
    return labels


def _frac_str(x):
    return str(Fraction(x))


def _latex_frac(c):
    c = Fraction(c)
    if c.denominator == 1:
        return str(c)
    sign = "-" if c < 0 else ""
    return rf"{sign}\frac{{{abs(c.numerator)}}}{{{c.denominator}}}"


def _relation_latex(rel):
    if not rel.terms:
        return rf"\mathrm{{{rel.target}}} = 0"
    bits = []
    for i, (mono, c) in enumerate(rel.terms):
        body = "".join(
            rf"(\mathrm{{{name}}})^{{{e}}}" if e > 1 else rf"(\mathrm{{{name}}})"
            for name, e in mono
        )
        mag = abs(c)
        coeff = "" if mag == 1 else _latex_frac(mag)
        piece = coeff + body
        if i == 0:
            bits.append(("-" if c < 0 else "") + piece)
        else:
            bits.append(("- " if c < 0 else "+ ") + piece)
    return rf"\mathrm{{{rel.target}}} = " + " ".join(bits)


def _emit(payload_json, lines_text, lines_latex, fmt, out):
    if fmt == "json":
        out.write(json.dumps(payload_json, indent=2) + "\n")
    elif fmt == "latex":
        out.write("\n".join(lines_latex) + "\n")
    else:
        out.write("\n".join(lines_text) + "\n")


def _cmd_info(args, out):
    data = cartan.algebra_data(args.algebra)
    payload = {
        "algebra": str(data.id),
        "series": data.id.series,
        "rank": data.rank,
        "cartan_matrix": [list(r) for r in data.cartan_matrix],
        "symmetrizer": [_frac_str(x) for x in data.symmetrizer],
        "primitive_degrees": list(data.primitive_degrees),
        "weyl_vector": list(data.weyl_vector),
        "highest_root": list(data.highest_root),
        "form_norm": _frac_str(data.form_norm),
        "dim_adjoint": data.dim_adjoint,
        "num_positive_roots": len(data.positive_roots),
    }
    text = [
        f"algebra {data.id}  (rank {data.rank}, adjoint dim {data.dim_adjoint})",
        "cartan matrix:",
    ]
    text += ["  " + " ".join(f"{v:3d}" for v in row) for row in data.cartan_matrix]
    text += [
        f"primitive degrees: {list(data.primitive_degrees)}",
        f"weyl vector: {_label_str(data.weyl_vector)}",
        f"highest root: {_label_str(data.highest_root)}",
        f"form normalization: {data.form_norm}",
    ]
    latex = [rf"\text{{{data.id}}}: \deg = {list(data.primitive_degrees)}"]
    _emit(payload, text, latex, args.format, out)


def _weight_sort_key(data, w):
    coords = data.alpha_coords(w)
    return (-sum(coords), tuple(-x for x in w))


def _cmd_rep(args, out):
    data = cartan.algebra_data(args.algebra)
    lam = _parse_labels(args.labels, data.rank)
    dim = reps.dimension(data, lam)
    cas = data.casimir(lam)
    payload = {
        "algebra": str(data.id),
        "highest_weight": list(lam),
        "dim": dim,
        "casimir": _frac_str(cas),
    }
    text = [f"{data.id} {_label_str(lam)}: dim {dim}, casimir {cas}"]
    latex = [rf"{_label_str(lam)}:\ d={dim},\ C={_latex_frac(cas)}"]
    if args.weights:
        ws = reps.weight_system(data, lam)
        ordered = sorted(ws.entries, key=lambda w: _weight_sort_key(data, w))
        payload["weights"] = [
            {"labels": list(w), "mult": ws.entries[w]} for w in ordered
        ]
        text += [f"  {_label_str(w)} x{ws.entries[w]}" for w in ordered]
        latex += [f"{_label_str(w)}^{{{ws.entries[w]}}}" for w in ordered]
    _emit(payload, text, latex, args.format, out)


def _cmd_tensor(args, out):
    data = cartan.algebra_data(args.algebra)
    l1 = _parse_labels(args.labels1, data.rank)
    l2 = _parse_labels(args.labels2, data.rank)
    deco = tensor.tensor_decompose(data, l1, l2)
    payload = {
        "algebra": str(data.id),
        "factors": [list(l1), list(l2)],
        "parts": [
            {"labels": list(w), "mult": m, "dim": reps.dimension(data, w)}
            for w, m in deco.parts
        ],
    }
    text = [f"{data.id} {_label_str(l1)} (x) {_label_str(l2)} ="]
    text += [
        f"  {m} x {_label_str(w)}  [dim {reps.dimension(data, w)}]"
        for w, m in deco.parts
    ]
    latex = [
        " \\oplus ".join(
            (f"{m}" if m > 1 else "") + _label_str(w) for w, m in deco.parts
        )
    ]
    _emit(payload, text, latex, args.format, out)


def _cmd_adjsq(args, out):
    data = cartan.algebra_data(args.algebra)
    rows = tensor.adjoint_square_table(data)
    payload = {
        "algebra": str(data.id),
        "rows": [
            {
                "labels": list(r.weight),
                "space": r.space,
                "dim": r.dim,
                "C": _frac_str(r.casimir),
                "L": _frac_str(r.l_eigenvalue),
            }
            for r in rows
        ],
    }
    text = [f"adjoint square of {data.id}:"]
    text += [
        f"  {r.space:3s} {_label_str(r.weight):>18s} dim {r.dim:6d}"
        f"  C = {str(r.casimir):>6s}  L = {str(r.l_eigenvalue):>7s}"
        for r in rows
    ]
    latex = [
        rf"{_label_str(r.weight)} & {r.dim} & {_latex_frac(r.casimir)}"
        rf" & {_latex_frac(r.l_eigenvalue)} \\"
        for r in rows
    ]
    _emit(payload, text, latex, args.format, out)


def _traces_defining(data, max_degree):
    gens = traceid.generators(data, "defining")
    ws = reps.weight_system(data, traceid.defining_weight(data))
    trace_degrees = {g.degree for g in gens.items if g.name.startswith("trA^")}
    rows = []
    for k in range(2, max_degree + 1):
        if k in trace_degrees:
            continue
        p = traceid.power_sum(ws, k)
        if p.is_zero():
            rows.append((f"trA^{k}", traceid.Relation(f"trA^{k}", (), True)))
            continue
        rel = traceid.reduce(data, p, k, gens, target_label=f"trA^{k}")
        rows.append((f"trA^{k}", rel))
    return rows


def _traces_adjoint_defining(data, max_degree):
    rows = []
    for k in range(2, max_degree + 1, 2):
        rows.append((f"trF^{k}", traceid.cross_relation(data, k)))
    return rows


def _traces_adjoint_self(data, max_degree):
    rows = []
    for k in range(4, max_degree + 1, 2):
        rows.append((f"trF^{k}", traceid.self_relation_adjoint(data, k)))
    return rows


def _cmd_traces(args, out):
    data = cartan.algebra_data(args.algebra)
    if args.basis == "self" and args.rep != "adjoint":
        raise LieTraceError("--basis self requires --rep adjoint")
    if args.rep == "defining":
        rows = _traces_defining(data, args.max_degree)
    elif args.basis == "defining":
        rows = _traces_adjoint_defining(data, args.max_degree)
    else:
        rows = _traces_adjoint_self(data, args.max_degree)
    payload = {
        "algebra": str(data.id),
        "rep": args.rep,
        "basis": args.basis,
        "max_degree": args.max_degree,
        "relations": [
            rel.to_json() if rel is not None else {"target": label, "relation": None}
            for label, rel in rows
        ],
    }
    text = []
    latex = []
    for label, rel in rows:
        if rel is None:
            text.append(f"{label}: no relation (not expressible in lower traces)")
            latex.append(rf"\mathrm{{{label}}}: \text{{no relation}}")
        else:
            text.append(rel.text())
            latex.append(_relation_latex(rel))
    _emit(payload, text, latex, args.format, out)


def _cmd_charpoly(args, out):
    data = cartan.algebra_data(args.algebra)
    cp = traceid.char_poly(data, args.rep)
    payload = {
        "algebra": str(data.id),
        "rep": args.rep,
        "degree": cp.degree,
        "coefficients": {
            str(power): [
                {"mono": {n: e for n, e in mono}, "coeff": str(c)}
                for mono, c in terms
            ]
            for power, terms in sorted(cp.coefficients.items(), reverse=True)
        },
    }
    text = [cp.text()]
    latex = [cp.text()]
    _emit(payload, text, latex, args.format, out)


def _cmd_projectors(args, out):
    from .errors import DegenerateSpectrum

    data = cartan.algebra_data(args.algebra)
    conv = None
    try:
        conv = spectral.family_conventions(data)
    except LieTraceError:
        conv = None
    table = spectral.spectrum_table(data)
    payload = {"algebra": str(data.id), "identities": [], "projectors": [],
               "degenerate": [], "antisym_minimal": spectral.antisym_minimal_check(table)}
    text = [f"spectral identities for {data.id}:"]
    latex = []
    try:
        ident = spectral.reduce_L_power(table)
        text.append("  " + spectral.identity_text(ident))
        entry = {"operator": spectral.identity_text(ident)}
        if ident.power == 2:
            full = spectral.full_space_identity(table)
            text.append("  " + spectral.identity_text(full))
            ident_for_index = full
        else:
            ident_for_index = ident
        if conv is not None:
            emitted = spectral.emit_index_identity(data, ident_for_index, conv)
            text.append("  " + emitted.text())
            latex.append(emitted.latex())
            entry["index_form"] = emitted.text()
            entry["index_terms"] = {k: str(v) for k, v in emitted.rhs.items()}
        payload["identities"].append(entry)
        for r in table.rows:
            if r.known:
                continue
            try:
                expr = spectral.projector_expr(table, r.weight, r.space)
            except DegenerateSpectrum as exc:
                item = {"target": [list(r.weight), r.space],
                        "degenerate_with": [str(p) for p in exc.pairs]}
                if item not in payload["degenerate"]:
                    payload["degenerate"].append(item)
                    text.append(
                        f"  projector {_label_str(r.weight)} ({r.space}): "
                        f"degenerate spectrum, cannot separate"
                    )
                continue
            line = spectral.projector_text(expr)
            entry = {"target": [list(r.weight), r.space],
                     "operator": line}
            if conv is not None:
                emitted = spectral.emit_projector(data, expr, conv)
                entry["index_terms"] = {k: str(v) for k, v in emitted.rhs.items()}
                line += "   =   " + emitted.text()
            text.append("  " + line)
            payload["projectors"].append(entry)
    except DegenerateSpectrum as exc:
        payload["degenerate"].append({"pairs": [str(p) for p in exc.pairs]})
        text.append(f"  degenerate spectrum: {exc}")
    text.append(
        "  antisymmetric minimal equation L(L+1/2)=0: "
        + ("holds" if payload["antisym_minimal"] else "FAILS")
    )
    _emit(payload, text, latex or text, args.format, out)


def _cmd_verify(args, out):
    data = cartan.algebra_data(args.algebra)
    series = data.id.series
    if series not in "ABCD":
        from .errors import UnsupportedFamily

        raise UnsupportedFamily(
            f"verify covers the classical families only, not {data.id}"
        )
    conv = spectral.family_conventions(data)
    fam = {"A": "su", "B": "so", "C": "sp", "D": "so"}[series]
    n = conv.n
    b = matreal.basis(fam, n)
    ts = matreal.structure_constants(b)
    tol = args.tol
    checks = []

    c1 = matreal.class1_checks(ts)
    for name, res in c1.items():
        checks.append((f"class1 {name}", res))

    table = spectral.spectrum_table(data)
    ident = spectral.full_space_identity(table) if len(
        [r for r in table.sym_rows() if not r.known]
    ) > 1 else spectral.reduce_L_power(table)
    emitted = spectral.emit_index_identity(data, ident, conv)
    checks.append(("class2 reduce-L identity", matreal.verify_identity(ts, emitted)))

    projset = []
    for r in table.rows:
        try:
            expr = spectral.projector_expr(table, r.weight, r.space)
        except LieTraceError:
            continue
        projset.append((r, matreal.projector_matrix(
            ts, spectral.emit_projector(data, expr, conv))))
    for r, mat in projset:
        checks.append(
            (f"projector {_label_str(r.weight)} {r.space} idempotent",
             float(abs(mat @ mat - mat).max()))
        )
    for i in range(len(projset)):
        for j in range(i + 1, len(projset)):
            r1, m1 = projset[i]
            r2, m2 = projset[j]
            checks.append(
                (f"orthogonal {_label_str(r1.weight)} {r1.space} / "
                 f"{_label_str(r2.weight)} {r2.space}",
                 float(abs(m1 @ m2).max()))
            )

    all_pass = all(res < tol for _, res in checks)
    payload = {
        "algebra": str(data.id),
        "tol": tol,
        "checks": [
            {"name": name, "residual": res, "pass": res < tol}
            for name, res in checks
        ],
        "all_pass": all_pass,
    }
    text = [f"numeric verification for {data.id} ({fam}({n})), tol {tol:g}:"]
    text += [
        f"  {name:55s} {res:10.3e}  {'PASS' if res < tol else 'FAIL'}"
        for name, res in checks
    ]
    text.append("all checks passed" if all_pass else "SOME CHECKS FAILED")
    _emit(payload, text, text, args.format, out)
    return 0 if all_pass else 1


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("text", "json", "latex"), default="text"
    )
    p = argparse.ArgumentParser(
        prog="lietrace",
        description="Exact Casimir spectra and trace identities of simple Lie algebras",
        parents=[common],
    )
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("info", parents=[common], help="Cartan data for an algebra")
    sp.add_argument("algebra")
    sp.set_defaults(func=_cmd_info)

    sp = sub.add_parser("rep", parents=[common], help="dimension/Casimir of an irrep")
    sp.add_argument("algebra")
    sp.add_argument("labels")
    sp.add_argument("--weights", action="store_true")
    sp.set_defaults(func=_cmd_rep)

    sp = sub.add_parser("tensor", parents=[common], help="tensor product decomposition")
    sp.add_argument("algebra")
    sp.add_argument("labels1")
    sp.add_argument("labels2")
    sp.set_defaults(func=_cmd_tensor)

    sp = sub.add_parser("adjsq", parents=[common],
                        help="adjoint tensor square table (dim, C, L)")
    sp.add_argument("algebra")
    sp.set_defaults(func=_cmd_adjsq)

    sp = sub.add_parser("traces", parents=[common], help="trace-polynomial relations")
    sp.add_argument("algebra")
    sp.add_argument("--rep", choices=("defining", "adjoint"), default="defining")
    sp.add_argument("--basis", choices=("defining", "self"), default="defining")
    sp.add_argument("--max-degree", type=int, default=_max_degree_default())
    sp.set_defaults(func=_cmd_traces)

    sp = sub.add_parser("charpoly", parents=[common],
                        help="characteristic polynomial in primitive invariants")
    sp.add_argument("algebra")
    sp.add_argument("--rep", choices=("defining", "adjoint"), default="defining")
    sp.set_defaults(func=_cmd_charpoly)

    sp = sub.add_parser("projectors", parents=[common],
                        help="spectral identities and projector expressions")
    sp.add_argument("algebra")
    sp.set_defaults(func=_cmd_projectors)

    sp = sub.add_parser("verify", parents=[common],
                        help="numeric verification against matrix realizations")
    sp.add_argument("algebra")
    sp.add_argument("--tol", type=float, default=1e-9)
    sp.set_defaults(func=_cmd_verify)
    return p


def run(argv, out=None):
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        result = args.func(args, out)
    except LieTraceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return int(result or 0)


def main():
    sys.exit(run(sys.argv[1:]))
