"""Exception types raised by the numerical and codec routines.

Everything recoverable derives from :class:`DeblurError` so callers (and the
CLI) can distinguish "the computation legitimately failed" from programming
errors, which surface as the usual ``ValueError``/``TypeError``.
"""


class DeblurError(Exception):
    """Base class for expected computation failures."""


class SingularMatrixError(DeblurError):
    """Gaussian elimination hit an exactly zero pivot after row pivoting."""


class RankDeficientError(DeblurError):
    """Least-squares matrix is (numerically) rank deficient."""


class SvdConvergenceError(DeblurError):
    """The SVD iteration failed to converge."""


class SingularComponentError(DeblurError):
    """A spectral solve would divide by a (near-)zero singular value."""


class DegenerateThresholdError(DeblurError):
    """A constant signal admits no min/max midpoint threshold."""


class DecodeError(DeblurError):
    """Bar-pattern decoding failed.

    ``group`` holds the 0-based digit-group index at fault when the failure
    is localized to one group, else ``None``.
    """

    def __init__(self, message, group=None):
        super().__init__(message)
        self.group = group


class VectorParseError(DeblurError):
    """A vector file contained a token that does not parse as a float."""
