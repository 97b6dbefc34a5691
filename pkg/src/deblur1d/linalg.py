"""Dense direct solvers: pivoted elimination, QR least squares, economy SVD.

These wrap LAPACK via numpy rather than re-deriving textbook loops: the
contracts below (error conditions, tolerances, deterministic SVD signs) are
what the rest of the package relies on, and LAPACK satisfies them with
plenty of margin at the dimensions used here (n up to a couple thousand).

No accuracy promise is made for ill-conditioned systems; ``solve_linear``
happily returns the garbage that exact arithmetic on rounded data produces.
That failure mode is the whole point of the regularization machinery in
:mod:`deblur1d.regularize`.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .blur import as_vector
from .errors import RankDeficientError, SingularMatrixError, SvdConvergenceError

__all__ = ["SvdFactors", "solve_linear", "invert", "solve_least_squares", "svd_econ"]

# Columns of R whose pivot falls at or below this times max|M| mark M as
# numerically rank deficient.
_RANK_TOL = 1e-14


class SvdFactors(NamedTuple):
    """Economy SVD A = U diag(sigma) V^T.

    ``u`` is m-by-n with orthonormal columns, ``sigma`` the n singular
    values sorted descending, ``v`` n-by-n with orthonormal columns.  Each
    singular-vector pair is signed so the largest-magnitude entry of v_j is
    positive (ties broken by lowest index), which makes repeated
    factorizations of the same matrix reproducible.
    """

    u: np.ndarray
    sigma: np.ndarray
    v: np.ndarray


def _as_matrix(a) -> np.ndarray:
    a = np.asarray(a, dtype=float)
    if a.ndim != 2:
        raise ValueError(f"expected a matrix, got shape {a.shape}")
    return a


def solve_linear(a, b) -> np.ndarray:
    """Solve the square system A x = b by row-pivoted Gaussian elimination."""
    a = _as_matrix(a)
    b = as_vector(b)
    if a.shape[0] != a.shape[1]:
        raise ValueError(f"matrix must be square, got shape {a.shape}")
    if a.shape[1] != b.size:
        raise ValueError(f"matrix is {a.shape[0]}x{a.shape[1]} but rhs has {b.size} entries")
    try:
        return np.linalg.solve(a, b)
    except np.linalg.LinAlgError as exc:
        raise SingularMatrixError(f"singular matrix: {exc}") from exc


def invert(a) -> np.ndarray:
    """Invert a square matrix (column-by-column solve against the identity).

    Only meant for desk-scale demonstrations: solving against a specific
    right-hand side is always preferable to forming the inverse.
    """
    a = _as_matrix(a)
    if a.shape[0] != a.shape[1]:
        raise ValueError(f"matrix must be square, got shape {a.shape}")
    try:
        return np.linalg.solve(a, np.identity(a.shape[0]))
    except np.linalg.LinAlgError as exc:
        raise SingularMatrixError(f"singular matrix: {exc}") from exc


def solve_least_squares(m, rhs) -> np.ndarray:
    """Minimize ||rhs - M x|| over x via Householder QR.

    The orthogonal-factorization route is deliberate: squaring the
    conditioning by forming M^T M loses roughly half the available digits,
    which is exactly the failure the augmented Tikhonov path exists to
    avoid.
    """
    m = _as_matrix(m)
    rhs = as_vector(rhs)
    rows, cols = m.shape
    if rows < cols:
        raise ValueError(f"need at least as many rows as columns, got {rows}x{cols}")
    if rhs.size != rows:
        raise ValueError(f"matrix has {rows} rows but rhs has {rhs.size} entries")
    q, r = np.linalg.qr(m)
    pivots = np.abs(np.diag(r))
    tol = _RANK_TOL * (np.abs(m).max() if m.size else 0.0)
    if np.any(pivots <= tol):
        k = int(np.argmax(pivots <= tol))
        raise RankDeficientError(
            f"matrix is numerically rank deficient (|r[{k},{k}]| = {pivots[k]:.3e})"
        )
    return np.linalg.solve(r, q.T @ rhs)


def svd_econ(a) -> SvdFactors:
    """Economy SVD of an m-by-n matrix with m >= n.

    Besides the factorization itself, callers rely on: sigma descending and
    nonnegative, U/V orthonormal to ~1e-10, reconstruction to ~1e-10
    relative, A v_j = sigma_j u_j columnwise, and the deterministic sign
    convention described on :class:`SvdFactors`.
    """
    a = _as_matrix(a)
    if a.shape[0] < a.shape[1]:
        raise ValueError(f"need at least as many rows as columns, got {a.shape[0]}x{a.shape[1]}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix entries must all be finite")
    try:
        u, sigma, vt = np.linalg.svd(a, full_matrices=False)
    except np.linalg.LinAlgError as exc:
        raise SvdConvergenceError(f"SVD failed to converge: {exc}") from exc
    v = vt.T.copy()
    u = u.copy()
    cols = np.arange(v.shape[1])
    lead = np.argmax(np.abs(v), axis=0)
    flip = v[lead, cols] < 0
    u[:, flip] *= -1.0
    v[:, flip] *= -1.0
    for arr in (u, sigma, v):
        arr.setflags(write=False)
    return SvdFactors(u=u, sigma=sigma, v=v)
