"""Shared fixtures: the two workhorse problems, factored once per session.

``hat500``    -- hat kernel, z = 0.05, n = 500, blurred test signal, noisy
                 copy at epsilon = 1e-5 (seed 7), and the SVD of A.
``coke570``   -- Gaussian kernel, z = 0.01, n = 570, the sampled product
                 code 049000027679, its blur, and the SVD of A.
"""

from types import SimpleNamespace

import pytest

import deblur1d as d

COKE_DIGITS = "049000027679"


@pytest.fixture(scope="session")
def hat500():
    spec = d.KernelSpec(d.Kernel.HAT, 0.05)
    grid = d.make_grid(500)
    a = d.build_blur_matrix(spec, 500)
    f = d.test_signal(grid)
    b = d.forward_blur(a, f)
    b_noise = d.add_noise(b, d.NoiseSpec(1e-5, 7))
    return SimpleNamespace(
        spec=spec, grid=grid, a=a, f=f, b=b, b_noise=b_noise, svd=d.svd_econ(a)
    )


@pytest.fixture(scope="session")
def coke570():
    spec = d.KernelSpec(d.Kernel.GAUSSIAN, 0.01)
    f_true = d.pattern_to_signal(d.encode_upc(COKE_DIGITS), 6)
    a = d.build_blur_matrix(spec, f_true.grid.n)
    b = d.forward_blur(a, f_true)
    return SimpleNamespace(
        spec=spec, digits=COKE_DIGITS, f_true=f_true, a=a, b=b, svd=d.svd_econ(a)
    )
