"""deblur1d: 1-d signal blurring, regularized deblurring, and UPC-A decoding.

Blurring a signal is a local average against a kernel; discretizing that
average with the midpoint rule turns it into a matrix-vector product
b = A f.  Undoing the blur means solving A f = b, which is badly behaved:
the blur matrix has rapidly decaying singular values, so tiny noise in b
explodes in the naive solution.  This package builds the forward model,
demonstrates the failure, and recovers signals via Tikhonov regularization,
truncated-SVD solutions, and L-curve parameter sweeps -- culminating in an
end-to-end UPC-A barcode encode / blur / add-noise / deblur / decode
pipeline.
"""

from .blur import Signal, as_vector, build_blur_matrix, forward_blur, test_signal
from .errors import (
    DeblurError,
    DecodeError,
    DegenerateThresholdError,
    RankDeficientError,
    SingularComponentError,
    SingularMatrixError,
    SvdConvergenceError,
    VectorParseError,
)
from .io import read_table_csv, read_vector_csv, write_table_csv, write_vector_csv
from .kernels import Grid, Kernel, KernelSpec, eval_kernel, make_grid
from .lcurve import LCurve, lcurve_sweep, logspace, suggest_corner
from .linalg import SvdFactors, invert, solve_least_squares, solve_linear, svd_econ
from .noise import NoiseSpec, add_noise, noise_vector, standard_normals, vector_norm
from .regularize import (
    Method,
    RegularizedSolution,
    gradient_phi,
    objective_phi,
    tikhonov_solve,
    truncated_svd_solve,
)
from .svd_analysis import (
    SpectralDiagnostics,
    expansion_coefficients,
    filtered_coefficients,
    naive_inverse_coefficients,
    spectral_diagnostics,
)
from .upc import (
    DIGIT_PATTERNS,
    BarPattern,
    BinaryBarVector,
    DecodeResult,
    GroupDiagnostic,
    check_digit_valid,
    decode_upc,
    encode_upc,
    parse_digits,
    pattern_to_signal,
    threshold_signal,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # kernels / grid
    "Kernel", "KernelSpec", "Grid", "make_grid", "eval_kernel",
    # blur
    "Signal", "as_vector", "build_blur_matrix", "forward_blur", "test_signal",
    # linalg
    "SvdFactors", "solve_linear", "invert", "solve_least_squares", "svd_econ",
    # noise
    "NoiseSpec", "vector_norm", "standard_normals", "noise_vector", "add_noise",
    # regularize
    "Method", "RegularizedSolution", "objective_phi", "gradient_phi",
    "tikhonov_solve", "truncated_svd_solve",
    # lcurve
    "LCurve", "logspace", "lcurve_sweep", "suggest_corner",
    # svd analysis
    "SpectralDiagnostics", "expansion_coefficients", "naive_inverse_coefficients",
    "filtered_coefficients", "spectral_diagnostics",
    # upc
    "DIGIT_PATTERNS", "BarPattern", "BinaryBarVector", "DecodeResult",
    "GroupDiagnostic", "parse_digits", "encode_upc", "pattern_to_signal",
    "threshold_signal", "decode_upc", "check_digit_valid",
    # io
    "read_vector_csv", "write_vector_csv", "read_table_csv", "write_table_csv",
    # errors
    "DeblurError", "SingularMatrixError", "RankDeficientError",
    "SvdConvergenceError", "SingularComponentError", "DegenerateThresholdError",
    "DecodeError", "VectorParseError",
]
