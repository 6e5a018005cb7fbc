"""Explicit matrix realizations of the classical families, as a numeric oracle.

Generators are built to the physics normalization tr(x_j x_k) = 2 delta_jk;
structure constants and the symmetric partner tensors come out of traces.
Everything here is binary64 + einsum; the exact side of the engine lives in
the weight-space modules, and this one just has to confirm it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import UnresolvedTensor, UnsupportedSize


@dataclass
class MatrixBasis:
    family: str  # "su" | "so" | "sp"
    n: int  # matrix size
    x: np.ndarray  # (dim, n, n) generators
    y: np.ndarray | None  # symmetric / J-symmetric partners where defined


@dataclass
class TensorSet:
    family: str
    n: int
    f: np.ndarray  # totally antisymmetric rank-3
    d: np.ndarray | None  # d[j,k,r] (su) or d[j,k,alpha] (so/sp)
    basis: MatrixBasis


def _herm_basis(n):
    """Traceless hermitean n x n matrices with tr(h_a h_b) = 2 delta_ab."""
    mats = []
    for a in range(n):
        for b in range(a + 1, n):
            m = np.zeros((n, n), dtype=complex)
            m[a, b] = m[b, a] = 1
            mats.append(m)
            m = np.zeros((n, n), dtype=complex)
            m[a, b] = -1j
            m[b, a] = 1j
            mats.append(m)
    for a in range(1, n):
        m = np.zeros((n, n), dtype=complex)
        for i in range(a):
            m[i, i] = 1
        m[a, a] = -a
        mats.append(m * np.sqrt(2.0 / (a * (a + 1))))
    return mats


def basis(family, n):
    family = family.lower()
    if family == "su":
        if n < 2:
            raise UnsupportedSize("su needs n >= 2")
        return MatrixBasis("su", n, np.array(_herm_basis(n)), None)
    if family == "so":
        if n < 5:
            raise UnsupportedSize("so needs n >= 5")
        xs = []
        for a in range(n):
            for b in range(a + 1, n):
                m = np.zeros((n, n), dtype=complex)
                m[a, b] = 1j
                m[b, a] = -1j
                xs.append(m)
        ys = []
        for a in range(n):
            for b in range(a + 1, n):
                m = np.zeros((n, n), dtype=complex)
                m[a, b] = m[b, a] = 1
                ys.append(m)
        for a in range(1, n):
            m = np.zeros((n, n), dtype=complex)
            for i in range(a):
                m[i, i] = 1
            m[a, a] = -a
            ys.append(m * np.sqrt(2.0 / (a * (a + 1))))
        return MatrixBasis("so", n, np.array(xs), np.array(ys))
    if family == "sp":
        if n < 4 or n % 2:
            raise UnsupportedSize("sp needs even n >= 4")
        h = n // 2
        xs = []
        ys = []
        # Hermitean M with J M J^-1 = -M^T: blocks [[P, Q], [Q^H, -P^T]]
        # with P hermitean and Q symmetric; the +M^T solutions (Q antisym,
        # trace part removed) are the partners.
        def embed(P, Q, sym):
            m = np.zeros((n, n), dtype=complex)
            m[:h, :h] = P
            m[h:, h:] = P.T if sym else -P.T
            m[:h, h:] = Q
            m[h:, :h] = Q.conj().T
            return m

        def herm_pairs():
            for a in range(h):
                for b in range(a + 1, h):
                    P = np.zeros((h, h), dtype=complex)
                    P[a, b] = P[b, a] = 1
                    yield P
                    P = np.zeros((h, h), dtype=complex)
                    P[a, b] = -1j
                    P[b, a] = 1j
                    yield P
            for a in range(h):
                P = np.zeros((h, h), dtype=complex)
                P[a, a] = 1
                yield P

        Z = np.zeros((h, h), dtype=complex)
        for P in herm_pairs():
            xs.append(embed(P, Z, sym=False))
        for a in range(h):
            for b in range(a, h):
                Q = np.zeros((h, h), dtype=complex)
                Q[a, b] = Q[b, a] = 1
                xs.append(embed(Z, Q, sym=False))
                Q = np.zeros((h, h), dtype=complex)
                Q[a, b] = Q[b, a] = 1j
                xs.append(embed(Z, Q, sym=False))
        # Partners: P hermitean traceless with +P^T block; Q antisymmetric.
        for P in herm_pairs():
            m = embed(P, Z, sym=True)
            if abs(np.trace(m)) > 1e-12:
                continue
            ys.append(m)
        for a in range(h):
            P = np.zeros((h, h), dtype=complex)
            for i in range(a):
                P[i, i] = 1
            P[a, a] = -a
            if a:
                ys.append(embed(P * np.sqrt(1.0 / (a * (a + 1))), Z, sym=True)
                          * np.sqrt(2.0))
        for a in range(h):
            for b in range(a + 1, h):
                Q = np.zeros((h, h), dtype=complex)
                Q[a, b] = 1
                Q[b, a] = -1
                ys.append(embed(Z, Q, sym=True))
                Q = np.zeros((h, h), dtype=complex)
                Q[a, b] = 1j
                Q[b, a] = -1j
                ys.append(embed(Z, Q, sym=True))
        xs = [m / np.sqrt(np.trace(m @ m).real / 2) for m in xs]
        ys = [m / np.sqrt(np.trace(m @ m).real / 2) for m in ys]
        return MatrixBasis("sp", n, np.array(xs), np.array(ys))
    raise UnsupportedSize(f"unknown family {family!r}")


def structure_constants(b):
    """f (or c) and d tensors from traces over the basis."""
    X = b.x
    comm = np.einsum("iab,jbc->ijac", X, X) - np.einsum("jab,ibc->ijac", X, X)
    anti = np.einsum("iab,jbc->ijac", X, X) + np.einsum("jab,ibc->ijac", X, X)
    if b.family == "su":
        # [l_j, l_k] = 2i f_jkl l_l ; {l_j, l_k} = 4/n d + 2 d_jkl l_l.
        f = np.einsum("ijab,kba->ijk", comm, X) / 4j
        d = np.einsum("ijab,kba->ijk", anti, X).real / 4
    else:
        # [x_j, x_k] = i c_jkl x_l ; {x_j, x_k} = (2 tr/n) + d_jka y_a.
        f = np.einsum("ijab,kba->ijk", comm, X) / 2j
        d = np.einsum("ijab,kba->ijk", anti, b.y).real / 2
    f = f.real
    return TensorSet(family=b.family, n=b.n, f=f, d=d, basis=b)


def _structures(ts):
    f = ts.f
    dim = f.shape[0]
    eye = np.eye(dim)
    out = {
        "unit_sym": np.einsum("jp,kq->jkpq", eye, eye)
        + np.einsum("jq,kp->jkpq", eye, eye),
        "unit_alt": np.einsum("jp,kq->jkpq", eye, eye)
        - np.einsum("jq,kp->jkpq", eye, eye),
        "delta_pair": np.einsum("jk,pq->jkpq", eye, eye),
        "cc1": np.einsum("jpr,kqr->jkpq", f, f),
        "cc2": np.einsum("jqr,kpr->jkpq", f, f),
        "cc_adj": np.einsum("jkr,pqr->jkpq", f, f),
    }
    out["cc_sym"] = out["cc1"] + out["cc2"]
    if ts.d is not None:
        out["dd"] = np.einsum("jkr,pqr->jkpq", ts.d, ts.d)
    return out


def _structure(ts, key, cache):
    if key == "cccc":
        f = ts.f
        return np.einsum("jmr,knr,mps,nqs->jkpq", f, f, f, f, optimize=True)
    if key not in cache:
        raise UnresolvedTensor(f"structure {key!r} not available for {ts.family}")
    return cache[key]


def evaluate_identity(ts, identity):
    """(lhs array, rhs array) of an emitted index identity, full-index."""
    cache = _structures(ts)
    lhs = _structure(ts, identity.lhs, cache)
    dim = ts.f.shape[0]
    rhs = np.zeros((dim,) * 4)
    for key, c in identity.rhs.items():
        rhs = rhs + float(c) * _structure(ts, key, cache)
    return lhs, rhs


def verify_identity(ts, identity, tol=None):
    """Max absolute deviation between the two sides over all index tuples."""
    lhs, rhs = evaluate_identity(ts, identity)
    residual = float(np.max(np.abs(lhs - rhs)))
    return residual


def projector_matrix(ts, emitted):
    """Numeric (dim^2, dim^2) matrix of an emitted projector combination."""
    cache = _structures(ts)
    dim = ts.f.shape[0]
    acc = np.zeros((dim,) * 4)
    for key, c in emitted.rhs.items():
        acc = acc + float(c) * _structure(ts, key, cache)
    # unit_sym/unit_alt carry a 1/2 in the operator normalization.
    return acc.reshape(dim * dim, dim * dim)


def class1_checks(ts):
    """Residuals of the three Jacobi-type matrix identities."""
    X = ts.basis.x

    def comm(A, B):
        return np.einsum("...ab,...bc->...ac", A, B) - np.einsum(
            "...ab,...bc->...ac", B, A
        )

    def acom(A, B):
        return np.einsum("...ab,...bc->...ac", A, B) + np.einsum(
            "...ab,...bc->...ac", B, A
        )

    dim, n, _ = X.shape
    Xj = X[:, None, None]
    Xk = X[None, :, None]
    Xl = X[None, None, :]
    cjk = comm(Xj, Xk)
    akl = acom(Xk, Xl)
    ajl = acom(Xj, Xl)
    jacobi = comm(cjk, Xl) + comm(comm(Xk, Xl), Xj) + comm(comm(Xl, Xj), Xk)
    mixed = comm(cjk, Xl) + acom(ajl, Xk) - acom(akl, Xj)
    cyclic = comm(acom(Xj, Xk), Xl) + comm(akl, Xj) + comm(ajl, Xk)
    return {
        "jacobi": float(np.max(np.abs(jacobi))),
        "mixed": float(np.max(np.abs(mixed))),
        "cyclic": float(np.max(np.abs(cyclic))),
    }


def adjoint_matrices(ts):
    """(F_j)_kl = i f_jlk, the family-normalized adjoint representation."""
    return 1j * np.einsum("jlk->jkl", ts.f)


def symmetrized_trace4(ts):
    """tr(F_(i F_j F_k F_l)), fully symmetrized, via real intermediates."""
    g = np.einsum("jlk->jkl", ts.f)  # F = i g, i^4 = 1
    t = np.einsum("iab,jbc,kcd,lda->ijkl", g, g, g, g, optimize=True)
    sym = np.zeros_like(t)
    for perm in itertools.permutations(range(4)):
        sym += np.transpose(t, perm)
    return sym / 24.0
