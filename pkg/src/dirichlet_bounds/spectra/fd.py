"""Five-point finite-difference Dirichlet spectra on polygons."""

import math

import numpy as np
from scipy import sparse

from ..errors import InputError
from .base import Spectrum, fd_source
from .lanczos import lowest_eigenpairs


def grid_mask(P, h):
    """Grid points ``(i h, j h)`` strictly inside ``P``; returns ``(i, j)`` index arrays."""
    lo = np.floor(P.vertices.min(axis=0) / h).astype(int)
    hi = np.ceil(P.vertices.max(axis=0) / h).astype(int)
    ii, jj = np.meshgrid(np.arange(lo[0], hi[0] + 1), np.arange(lo[1], hi[1] + 1), indexing="ij")
    ii, jj = ii.ravel(), jj.ravel()
    inside = P.contains(np.column_stack([ii * h, jj * h]), strict=True)
    return ii[inside], jj[inside]


def fd_laplacian(P, h):
    """Sparse ``-Delta_h`` on the interior grid points, zero outside."""
    ii, jj = grid_mask(P, h)
    n = len(ii)
    index = {(i, j): k for k, (i, j) in enumerate(zip(ii.tolist(), jj.tolist()))}
    rows, cols = [], []
    for k, (i, j) in enumerate(zip(ii.tolist(), jj.tolist())):
        for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
            m = index.get(nb)
            if m is not None:
                rows.append(k)
                cols.append(m)
    off = sparse.csr_matrix((np.full(len(rows), -1.0), (rows, cols)), shape=(n, n))
    return ((sparse.identity(n, format="csr") * 4.0 + off) / (h * h)).tocsr()


def _raw(P, h, kmax, **kw):
    A = fd_laplacian(P, h)
    if A.shape[0] < kmax + 1:
        raise InputError(f"only {A.shape[0]} interior grid points for {kmax} eigenvalues at h = {h}")
    vals, _, _ = lowest_eigenpairs(A, kmax, **kw)
    return vals


def fd_spectrum(P, h, kmax, extrapolate=False, **kw):
    """Lowest ``kmax`` eigenvalues of the five-point Dirichlet Laplacian on ``P``.

    With ``extrapolate`` the run is repeated at ``h / 2`` and combined as
    ``(4 lam_{h/2} - lam_h) / 3``, with error bar ``|lam_h - lam_{h/2}| / 3``.
    Extra keyword arguments go to :func:`lowest_eigenpairs`.
    """
    if h <= 0:
        raise InputError("grid spacing must be positive")
    coarse = _raw(P, h, kmax, **kw)
    if not extrapolate:
        return Spectrum(coarse, fd_source(h, False))
    fine = _raw(P, 0.5 * h, kmax, **kw)
    ext = (4.0 * fine - coarse) / 3.0
    err = np.abs(coarse - fine) / 3.0
    order = np.argsort(ext, kind="stable")
    return Spectrum(ext[order], fd_source(h, True), err[order])


def square_fd_exact(n_interior, m, k):
    """Closed-form eigenvalue of the five-point Laplacian on the unit square with ``h = 1/(n+1)``."""
    h = 1.0 / (n_interior + 1)
    return 4.0 / h**2 * (math.sin(m * math.pi * h / 2) ** 2 + math.sin(k * math.pi * h / 2) ** 2)
