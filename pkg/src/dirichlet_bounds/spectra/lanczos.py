"""Shift-invert block Lanczos with full reorthogonalisation for the lowest eigenpairs."""

import numpy as np
from scipy.sparse.linalg import splu

from ..errors import ConvergenceError


def _orthonormalise(W, Q=None, drop=1e-10):
    """Remove the span of ``Q`` from ``W`` (twice) and return an orthonormal basis of the rest."""
    for _ in range(2):
        if Q is not None and Q.shape[1]:
            W = W - Q @ (Q.T @ W)
    if W.shape[1] == 0:
        return W
    U, s, _ = np.linalg.svd(W, full_matrices=False)
    return U[:, s > drop * max(s[0], 1e-300)]


def lowest_eigenpairs(A, nev, block=4, tol=1e-10, max_restarts=50, krylov_cols=None, seed=0):
    """The ``nev`` smallest eigenvalues of a sparse SPD matrix ``A``.

    The Krylov space of ``A^-1`` is grown block by block with every new block
    orthogonalised against the whole basis; after Rayleigh-Ritz the ``nev``
    Ritz pairs are tested with the residual ``||A y - lam y|| <= tol lam``.
    Unconverged runs restart from the leading Ritz vectors.

    Returns ``(values, vectors, residuals)`` sorted by value.
    """
    n = A.shape[0]
    if nev > n:
        raise ValueError(f"asked for {nev} eigenvalues of a {n}x{n} matrix")
    lu = splu(A.tocsc())
    cols = min(n, krylov_cols or max(3 * nev, nev + 8 * block))
    rng = np.random.default_rng(seed)
    start = _orthonormalise(rng.standard_normal((n, block)))
    for _ in range(max_restarts):
        Q = start
        blocks, images = [Q], []
        total = Q.shape[1]
        while True:
            W = lu.solve(blocks[-1])
            images.append(W)
            if total >= cols:
                break
            basis = np.hstack(blocks)
            nxt = _orthonormalise(W, basis)
            if nxt.shape[1] == 0:
                break
            nxt = nxt[:, : cols - total]
            blocks.append(nxt)
            total += nxt.shape[1]
        V = np.hstack(blocks)
        T = V.T @ np.hstack(images)
        theta, S = np.linalg.eigh(0.5 * (T + T.T))
        order = np.argsort(theta)[::-1]
        keep = order[: min(nev, len(order))]
        vals = 1.0 / theta[keep]
        Y = V @ S[:, keep]
        res = np.linalg.norm(A @ Y - Y * vals, axis=0) / np.abs(vals)
        if len(keep) == nev and np.all(res <= tol):
            srt = np.argsort(vals)
            return vals[srt], Y[:, srt], res[srt]
        extra = order[: min(nev + block, len(order))]
        start = _orthonormalise(V @ S[:, extra])
    raise ConvergenceError(f"Lanczos: {int(np.sum(res > tol))} of {nev} Ritz pairs unconverged "
                           f"after {max_restarts} restarts (max residual {res.max():.2e})")
