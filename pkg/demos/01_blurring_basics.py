"""Forward blurring: kernels, the midpoint grid, and b = A f.

A blurred signal replaces each value f(s) by a local average of f against
a kernel weight centered at s.  On the midpoint grid with n cells, that
average becomes the matrix-vector product b = A f with
A[j, k] = h(s_j, t_k)/n.  This script samples the three kernel shapes,
blurs the built-in piecewise test signal at two widths, and writes the
plot data as CSV tables.

Run:  python demos/01_blurring_basics.py [output_dir]
"""

import sys
from pathlib import Path

import numpy as np

import deblur1d as d

out = Path(sys.argv[1] if len(sys.argv) > 1 else "demo_output")
out.mkdir(parents=True, exist_ok=True)

# -- the three kernel shapes, centered at s = 0.35 ------------------------
s0 = 0.35
t = np.linspace(0.2, 0.5, 601)
for z in (0.025, 0.05):
    rows = zip(
        t,
        d.eval_kernel(d.KernelSpec(d.Kernel.AVERAGING, z), s0, t),
        d.eval_kernel(d.KernelSpec(d.Kernel.HAT, z), s0, t),
        d.eval_kernel(d.KernelSpec(d.Kernel.GAUSSIAN, z), s0, t),
    )
    path = out / f"kernel_shapes_z{z}.csv"
    d.write_table_csv(path, ["t", "averaging", "hat", "gaussian"], rows)
    print(f"wrote {path}: h(0.35, t) for all three kernels, z = {z}")

# -- blur the test signal at two widths ------------------------------------
n = 100
grid = d.make_grid(n)
f = d.test_signal(grid)
print(f"\ntest signal on n = {n} midpoints: a ramp, a step, and a hat")
for z in (0.025, 0.05):
    a = d.build_blur_matrix(d.KernelSpec(d.Kernel.AVERAGING, z), n)
    b = d.forward_blur(a, f)
    tv = lambda v: np.abs(np.diff(v)).sum()
    print(f"  z = {z}: total variation {tv(f.values):.3f} -> {tv(b.values):.3f} "
          "(blurring smooths)")
    path = out / f"blurred_test_signal_z{z}.csv"
    d.write_table_csv(path, ["t", "f", "b"], zip(grid.points, f.values, b.values))
    print(f"  wrote {path}")

# -- the matrix itself is banded for compact kernels -----------------------
a = d.build_blur_matrix(d.KernelSpec(d.Kernel.AVERAGING, 0.025), n)
nonzeros = np.count_nonzero(a, axis=1)
print(f"\naveraging kernel z = 0.025: at most {nonzeros.max()} nonzeros per row "
      f"of the {n}x{n} matrix; symmetric: {np.array_equal(a, a.T)}")
