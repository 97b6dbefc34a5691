"""Tikhonov-regularized and truncated-SVD solutions of A f ~ b.

Plain inversion insists on A f = b exactly, which amplifies whatever noise
lives in b by the reciprocals of A's smallest singular values.  Tikhonov
regularization (ridge regression) instead minimizes

    phi(f) = ||b - A f||^2 + lambda^2 ||f||^2,

trading data fit against solution size.  Three algebraically equivalent
routes to the minimizer are provided:

* ``AUGMENTED_LS`` -- least squares on [A; lambda I] against [b; 0].  The
  numerically preferred default: it never squares the conditioning.
* ``NORMAL_EQUATIONS`` -- solve (A^T A + lambda^2 I) f = A^T b directly.
  Kept for comparison; loses about half the digits on near-singular A.
* ``SVD_FILTER`` -- spectral form sum_j (u_j^T b) sigma_j/(sigma_j^2 +
  lambda^2) v_j.  The cheap route when many lambdas share one
  factorization.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .blur import as_vector
from .errors import SingularComponentError
from .linalg import SvdFactors, solve_least_squares, solve_linear, svd_econ
from .noise import vector_norm
from .svd_analysis import filtered_coefficients

__all__ = [
    "Method",
    "RegularizedSolution",
    "objective_phi",
    "gradient_phi",
    "tikhonov_solve",
    "truncated_svd_solve",
]

# Under SVD_FILTER with lambda = 0, singular values at or below this times
# sigma_1 raise instead of dividing: surfacing the ill-posedness beats
# emitting near-infinities.
_SV_CUTOFF = 1e-14


class Method(enum.Enum):
    """Solve path for the Tikhonov minimizer."""

    AUGMENTED_LS = "aug"
    NORMAL_EQUATIONS = "normal"
    SVD_FILTER = "svd"

    @classmethod
    def from_name(cls, name: str) -> "Method":
        try:
            return cls(name.strip().lower())
        except ValueError:
            options = ", ".join(m.value for m in cls)
            raise ValueError(f"unknown method {name!r}; expected one of: {options}") from None


@dataclass(frozen=True)
class RegularizedSolution:
    """One Tikhonov solve: the minimizer plus its two norms."""

    lam: float
    f_lambda: np.ndarray
    residual_norm: float
    solution_norm: float
    method: Method


def _check_problem(a, b, f=None, lam=0.0):
    a = np.asarray(a, dtype=float)
    b = as_vector(b)
    if a.ndim != 2:
        raise ValueError(f"expected a matrix, got shape {a.shape}")
    if a.shape[0] != b.size:
        raise ValueError(f"matrix has {a.shape[0]} rows but data has {b.size} entries")
    lam = float(lam)
    if not math.isfinite(lam) or lam < 0:
        raise ValueError(f"lambda must be a nonnegative real, got {lam!r}")
    if f is None:
        return a, b, lam
    f = as_vector(f)
    if a.shape[1] != f.size:
        raise ValueError(f"matrix has {a.shape[1]} columns but f has {f.size} entries")
    return a, b, f, lam


def objective_phi(a, b, f, lam: float) -> float:
    """phi(f) = ||b - A f||^2 + lambda^2 ||f||^2."""
    a, b, f, lam = _check_problem(a, b, f, lam)
    r = b - a @ f
    return float(r @ r + lam * lam * (f @ f))


def gradient_phi(a, b, f, lam: float) -> np.ndarray:
    """grad phi = 2 (A^T A f + lambda^2 f - A^T b); zero exactly at f_lambda."""
    a, b, f, lam = _check_problem(a, b, f, lam)
    return 2.0 * (a.T @ (a @ f) + lam * lam * f - a.T @ b)


def _svd_filter_solution(svd: SvdFactors, b: np.ndarray, lam: float) -> np.ndarray:
    if lam == 0.0:
        sigma = svd.sigma
        cutoff = _SV_CUTOFF * (sigma[0] if sigma.size else 0.0)
        if sigma.size == 0 or sigma[-1] <= cutoff:
            raise SingularComponentError(
                "singular values reach the cutoff; lambda = 0 spectral solve undefined"
            )
        coeffs = (svd.u.T @ b) / sigma
    else:
        coeffs = filtered_coefficients(svd, b, lam)
    return svd.v @ coeffs


def tikhonov_solve(
    a,
    b,
    lam: float,
    method: Method = Method.AUGMENTED_LS,
    svd: SvdFactors | None = None,
) -> RegularizedSolution:
    """Minimize phi over f for one lambda >= 0.

    ``svd`` supplies a precomputed factorization for ``SVD_FILTER`` (it is
    ignored by the other methods); omit it and one is computed on the fly.
    """
    a, b, lam = _check_problem(a, b, lam=lam)
    if a.shape[0] != a.shape[1]:
        raise ValueError(f"blur matrix must be square, got shape {a.shape}")
    n = a.shape[1]
    if method is Method.AUGMENTED_LS:
        aug = np.vstack([a, lam * np.identity(n)])
        rhs = np.concatenate([b, np.zeros(n)])
        f = solve_least_squares(aug, rhs)
    elif method is Method.NORMAL_EQUATIONS:
        f = solve_linear(a.T @ a + lam * lam * np.identity(n), a.T @ b)
    elif method is Method.SVD_FILTER:
        f = _svd_filter_solution(svd if svd is not None else svd_econ(a), b, lam)
    else:
        raise ValueError(f"unknown method {method!r}")
    return RegularizedSolution(
        lam=lam,
        f_lambda=f,
        residual_norm=vector_norm(b - a @ f),
        solution_norm=vector_norm(f),
        method=method,
    )


def truncated_svd_solve(svd: SvdFactors, b, k: int) -> np.ndarray:
    """Partial spectral solution f_k = sum_{j<=k} (u_j^T b / sigma_j) v_j.

    Chopping the sum after k terms discards the troublesome small-sigma
    components outright, an effective alternative to the smooth Tikhonov
    roll-off.  k = n with all sigma_j well away from zero reproduces the
    direct solve.
    """
    b = as_vector(b)
    n = svd.sigma.size
    k = int(k)
    if not 1 <= k <= n:
        raise ValueError(f"k must lie in 1..{n}, got {k}")
    if np.any(svd.sigma[:k] == 0.0):
        raise SingularComponentError(f"zero singular value within the first {k} terms")
    coeffs = (svd.u[:, :k].T @ b) / svd.sigma[:k]
    return svd.v[:, :k] @ coeffs
