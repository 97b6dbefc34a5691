"""L-curve data: the (residual norm, solution norm) trade-off over lambda.

Sweeping lambda and plotting ||b_noise - A f_lambda|| against ||f_lambda||
on log-log axes traces an L-shaped curve: a steep branch where increasing
lambda cheaply shrinks the solution, and a flat branch where it only spoils
the fit.  Good regularization parameters sit near the bend.

The corner finder below scores each interior point by the Menger curvature
of its log-log triple and returns the maximizer.  The choice of that
particular corner definition is this package's own heuristic -- the
trade-off curve itself has no canonical "corner" -- so treat the suggestion
as advisory and look at the curve.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .blur import as_vector
from .linalg import SvdFactors, svd_econ
from .regularize import Method, tikhonov_solve

__all__ = ["LCurve", "logspace", "lcurve_sweep", "suggest_corner"]


def logspace(lo_exp: float, hi_exp: float, count: int) -> np.ndarray:
    """count geometrically spaced values from 10**lo_exp to 10**hi_exp inclusive."""
    count = int(count)
    if count < 2:
        raise ValueError(f"need at least 2 values, got {count}")
    return np.logspace(float(lo_exp), float(hi_exp), count)


@dataclass(frozen=True, eq=False)
class LCurve:
    """Sweep results: lambdas (strictly increasing) and the two norms."""

    lambdas: np.ndarray
    residual_norms: np.ndarray
    solution_norms: np.ndarray

    def __post_init__(self):
        lam = np.asarray(self.lambdas, dtype=float)
        res = np.asarray(self.residual_norms, dtype=float)
        sol = np.asarray(self.solution_norms, dtype=float)
        if not (lam.ndim == res.ndim == sol.ndim == 1 and lam.size == res.size == sol.size):
            raise ValueError("lambdas and norms must be 1-d and equally long")
        if lam.size and (lam[0] <= 0 or np.any(np.diff(lam) <= 0)):
            raise ValueError("lambdas must be positive and strictly increasing")
        for name, arr in (("lambdas", lam), ("residual_norms", res), ("solution_norms", sol)):
            arr = arr.copy()
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)

    def __len__(self):
        return self.lambdas.size


def lcurve_sweep(a, b_noise, lambdas, method: Method = Method.SVD_FILTER) -> LCurve:
    """Solve the regularization problem at each lambda and record both norms.

    Norms are taken against the data actually passed in -- hand this the
    noisy measurement, not the clean blur.  With ``SVD_FILTER`` (the
    default) a single factorization of A is shared across the sweep, which
    is what makes hundred-point sweeps cheap.
    """
    lambdas = np.asarray(lambdas, dtype=float)
    b_noise = as_vector(b_noise)
    svd: SvdFactors | None = svd_econ(a) if method is Method.SVD_FILTER else None
    res = np.empty(lambdas.size)
    sol = np.empty(lambdas.size)
    for i, lam in enumerate(lambdas):
        solution = tikhonov_solve(a, b_noise, float(lam), method, svd=svd)
        res[i] = solution.residual_norm
        sol[i] = solution.solution_norm
    return LCurve(lambdas, res, sol)


def _menger_curvature(x: np.ndarray, y: np.ndarray, i: int) -> float:
    ax, ay = x[i - 1], y[i - 1]
    bx, by = x[i], y[i]
    cx, cy = x[i + 1], y[i + 1]
    ab = np.hypot(bx - ax, by - ay)
    bc = np.hypot(cx - bx, cy - by)
    ca = np.hypot(cx - ax, cy - ay)
    if ab == 0.0 or bc == 0.0 or ca == 0.0:
        return 0.0
    cross = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
    return 2.0 * abs(cross) / (ab * bc * ca)


def suggest_corner(curve: LCurve) -> int:
    """Index of the curve point with maximal log-log Menger curvature.

    Advisory only; ties go to the smallest index.  Degenerate curves (fewer
    than three points, or norms at zero where the log-log map is undefined)
    raise instead of guessing.
    """
    m = len(curve)
    if m < 3:
        raise ValueError(f"corner detection needs at least 3 points, got {m}")
    if np.any(curve.residual_norms <= 0) or np.any(curve.solution_norms <= 0):
        raise ValueError("corner undefined: curve has nonpositive norms")
    x = np.log10(curve.residual_norms)
    y = np.log10(curve.solution_norms)
    curvatures = np.array([_menger_curvature(x, y, i) for i in range(1, m - 1)])
    return int(np.argmax(curvatures)) + 1
