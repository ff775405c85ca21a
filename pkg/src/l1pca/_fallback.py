"""NumPy implementations of the hot per-iteration kernels.

Signature-compatible with the compiled module ``l1pca._core``; the active
backend is chosen once at import time by :mod:`l1pca.kernels`. These are
BLAS-backed and fine for any size; the compiled versions avoid temporaries
and win in the small-m, large-n regime the IRLS loops live in.
"""

import numpy as np


def weighted_gram(a, w=None, work=None):
    """Gram matrix of the row-weighted data, (sqrt(w)*a)^T (sqrt(w)*a).

    ``w=None`` means unit weights (no scaling pass at all, so the result
    is bitwise ``a.T @ a``). ``work`` is an optional (n, m) scratch buffer.
    """
    if w is None:
        return a.T @ a
    s = np.sqrt(w)[:, None]
    if work is not None:
        np.multiply(a, s, out=work)
        scaled = work
    else:
        scaled = a * s
    return scaled.T @ scaled


def residual_rowstats(e):
    """Per-row L1 mass and squared L2 mass of a residual matrix.

    Returns ``(row_abs, row_sq)`` with ``row_abs[i] = sum_j |e_ij|`` and
    ``row_sq[i] = sum_j e_ij**2``.
    """
    return np.abs(e).sum(axis=1), np.einsum("ij,ij->i", e, e)


def subtract_projection(a, y, x):
    """Reconstruction residual ``a - y @ x.T`` (one fresh array)."""
    return a - y @ x.T


def first_order_eigenpairs(vals, vecs, delta):
    """First-order update of a full eigensystem under a symmetric change.

    For each pair (lambda_i, v_i) of the previous matrix and perturbation
    ``delta``:

        lambda_i' = lambda_i + v_i^T delta v_i
        v_i'      = v_i + sum_{j != i} (v_j^T delta v_i)/(lambda_i - lambda_j) v_j

    Accurate to o(||delta||^2). Returns raw (new_vals, new_vecs): no
    re-sorting, re-orthonormalization, or sign fixing; callers needing a
    valid eigensystem must post-process. Caller guarantees a nondegenerate
    spectrum (zero gap would divide by zero here).
    """
    c = vecs.T @ (delta @ vecs)
    new_vals = vals + np.diag(c)
    gaps = vals[None, :] - vals[:, None]  # gaps[j, i] = lambda_i - lambda_j
    np.fill_diagonal(gaps, 1.0)
    coef = c / gaps
    np.fill_diagonal(coef, 0.0)
    return new_vals, vecs + vecs @ coef


def mgs_orthonormalize(v):
    """Right-looking modified Gram-Schmidt on the columns of ``v``.

    Operates on (and returns) a fresh array; columns are processed left to
    right, each trailing block re-projected immediately after a column is
    normalized.
    """
    q = np.array(v, dtype=np.float64, copy=True)
    m = q.shape[1]
    for k in range(m):
        nrm = np.linalg.norm(q[:, k])
        if nrm > 0.0:
            q[:, k] /= nrm
        if k + 1 < m:
            q[:, k + 1:] -= np.outer(q[:, k], q[:, k] @ q[:, k + 1:])
    return q
