"""Why f = A^-1 b is a trap: a 2x2 warm-up, then a real blur matrix.

Deblurring looks like a solved problem -- invert the blur matrix.  Two
experiments show why that fails.  First, a tiny 2x2 matrix with nearly
parallel rows maps far-apart inputs to nearby outputs, so inverting it
amplifies measurement error 20-fold.  Second, a 500-point hat-kernel blur
amplifies even 0.001% measurement noise into a recovered signal thousands
of times larger than the truth.

Run:  python demos/02_why_inversion_fails.py [output_dir]
"""

import sys
from pathlib import Path

import numpy as np

import deblur1d as d

out = Path(sys.argv[1] if len(sys.argv) > 1 else "demo_output")
out.mkdir(parents=True, exist_ok=True)

# -- 2x2 conditioning story -------------------------------------------------
a = np.array([[1.0, -0.05], [1.0, 0.05]])
print("A =", a.tolist(), " A^-1 =", d.invert(a).tolist())
f1 = np.array([1.0, 1.25])
b1 = a @ f1
b_noise = np.array([0.95, 1.05])          # b1 perturbed by +-0.0125
f_rec = d.solve_linear(a, b_noise)
print(f"true f = {f1.tolist()}, recovered from perturbed data = {f_rec.tolist()}")
print(f"data moved {np.linalg.norm(b_noise - b1):.4f}, "
      f"solution moved {np.linalg.norm(f_rec - f1):.4f}\n")

# -- blur matrix: noise amplification --------------------------------------
n = 500
spec = d.KernelSpec(d.Kernel.HAT, 0.05)
grid = d.make_grid(n)
a = d.build_blur_matrix(spec, n)
f = d.test_signal(grid)
b = d.forward_blur(a, f)

for eps in (1e-5, 1e-3):
    b_noise = d.add_noise(b, d.NoiseSpec(eps, seed=7))
    f_rec = d.solve_linear(a, b_noise.values)
    rel = np.linalg.norm(f_rec - f.values) / np.linalg.norm(f.values)
    print(f"eps = {eps:g}: data perturbed by {eps:.0e}*||b||, "
          f"recovered signal off by {rel:.3g}x (max |entry| {np.abs(f_rec).max():.3g})")
    path = out / f"naive_recovery_eps{eps:g}.csv"
    d.write_table_csv(path, ["t", "f_true", "b_noise", "f_rec"],
                      zip(grid.points, f.values, b_noise.values, f_rec))
    print(f"  wrote {path}")

print("\nthe blur itself changes b hardly at all, but inversion amplifies the")
print("noise without bound; regularization (demo 03) is the remedy")
