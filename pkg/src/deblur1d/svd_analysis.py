"""Spectral diagnostics: expansion coefficients and filter factors.

With A = U diag(sigma) V^T and square A, any data vector expands as
b = sum_j (u_j^T b) u_j, and the naive inverse solution carries
coefficients (u_j^T b)/sigma_j against the v_j basis.  Comparing how fast
|u_j^T b| decays against sigma_j explains when that inversion is usable:
smooth data loses its high-j content faster than the singular values do,
while additive noise contributes roughly equally at every j and gets
amplified without bound once sigma_j drops below the noise floor.

Regularization replaces 1/sigma_j by sigma_j/(sigma_j^2 + lambda^2), which
matches 1/sigma_j for sigma_j >> lambda and rolls off to zero as
sigma_j -> 0.  All quantities here are cheap given one shared
:class:`~deblur1d.linalg.SvdFactors`, so a single factorization serves
every diagnostic and every lambda.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .blur import as_vector
from .errors import SingularComponentError
from .linalg import SvdFactors

__all__ = [
    "expansion_coefficients",
    "naive_inverse_coefficients",
    "filtered_coefficients",
    "SpectralDiagnostics",
    "spectral_diagnostics",
]


def _check_dim(svd: SvdFactors, x: np.ndarray):
    if x.size != svd.u.shape[0]:
        raise ValueError(f"vector has {x.size} entries but U has {svd.u.shape[0]} rows")


def expansion_coefficients(svd: SvdFactors, x) -> np.ndarray:
    """Coefficients u_j^T x of ``x`` against the left singular vectors."""
    x = as_vector(x)
    _check_dim(svd, x)
    return svd.u.T @ x


def naive_inverse_coefficients(svd: SvdFactors, b) -> np.ndarray:
    """Coefficients (u_j^T b)/sigma_j of the unregularized solution.

    Assembling sum_j of these against v_j reproduces the direct solve up to
    conditioning-limited error, including its blow-up when small sigma_j
    meet data that is not correspondingly small.
    """
    if np.any(svd.sigma == 0.0):
        raise SingularComponentError("zero singular value; naive inversion undefined")
    return expansion_coefficients(svd, b) / svd.sigma


def filtered_coefficients(svd: SvdFactors, b, lam: float) -> np.ndarray:
    """Regularized coefficients (u_j^T b) * sigma_j/(sigma_j^2 + lambda^2)."""
    lam = float(lam)
    if lam <= 0:
        raise ValueError(f"lambda must be positive, got {lam!r}")
    filt = svd.sigma / (svd.sigma**2 + lam * lam)
    return expansion_coefficients(svd, b) * filt


@dataclass(frozen=True)
class SpectralDiagnostics:
    """Per-index spectral table for one data vector and one lambda."""

    lam: float
    sigma: np.ndarray
    coeff: np.ndarray
    naive_coeff: np.ndarray
    filtered_coeff: np.ndarray

    def rows(self):
        """Magnitude rows (j, sigma, |coeff|, |naive|, |filtered|), j 1-based."""
        for j in range(self.sigma.size):
            yield (
                j + 1,
                float(self.sigma[j]),
                float(abs(self.coeff[j])),
                float(abs(self.naive_coeff[j])),
                float(abs(self.filtered_coeff[j])),
            )


def spectral_diagnostics(svd: SvdFactors, b, lam: float) -> SpectralDiagnostics:
    """Bundle all coefficient diagnostics computed from one factorization."""
    return SpectralDiagnostics(
        lam=float(lam),
        sigma=svd.sigma,
        coeff=expansion_coefficients(svd, b),
        naive_coeff=naive_inverse_coefficients(svd, b),
        filtered_coeff=filtered_coefficients(svd, b, lam),
    )
