"""The L-curve: picking lambda by plotting the misfit/size trade-off.

Each lambda yields a pair (||b_noise - A f_lambda||, ||f_lambda||).  On
log-log axes these pairs trace an "L": the vertical branch is where a bit
more regularization cheaply shrinks the solution, the horizontal branch is
where it only ruins the fit, and good lambdas live near the bend.  This
script sweeps 100 log-spaced lambdas, writes the curve, and marks the
curvature-based corner suggestion (advisory -- always look at the curve).

Run:  python demos/04_choosing_lambda.py [output_dir]
"""

import sys
from pathlib import Path

import numpy as np

import deblur1d as d

out = Path(sys.argv[1] if len(sys.argv) > 1 else "demo_output")
out.mkdir(parents=True, exist_ok=True)

n = 500
grid = d.make_grid(n)
a = d.build_blur_matrix(d.KernelSpec(d.Kernel.HAT, 0.05), n)
f = d.test_signal(grid)
b = d.forward_blur(a, f)
b_noise = d.add_noise(b, d.NoiseSpec(1e-5, seed=7))

lambdas = d.logspace(-7, 0.5, 100)
curve = d.lcurve_sweep(a, b_noise.values, lambdas)
path = out / "lcurve_hat500.csv"
d.write_table_csv(path, ["lambda", "residual_norm", "solution_norm"],
                  zip(curve.lambdas, curve.residual_norms, curve.solution_norms))
print(f"wrote {path} (100 log-spaced lambdas in [1e-7, 10^0.5])")

naive_norm = np.linalg.norm(d.solve_linear(a, b_noise.values))
nb = d.vector_norm(b_noise.values)
print(f"\nlandmarks: ||A^-1 b_noise|| = {naive_norm:.2f} (top-left plateau), "
      f"||b_noise|| = {nb:.2f} (bottom-right asymptote)")
print(f"smallest lambda: solution norm {curve.solution_norms[0]:.2f} "
      f"(approaches the naive norm from below)")
print(f"largest lambda:  residual {curve.residual_norms[-1]:.2f} "
      f"(climbing toward ||b_noise||)")

i = d.suggest_corner(curve)
lam_corner = curve.lambdas[i]
print(f"\ncurvature corner suggestion: index {i}, lambda = {lam_corner:.3g}")
for lam in (lam_corner / 100, lam_corner, lam_corner * 100):
    sol = d.tikhonov_solve(a, b_noise.values, float(lam), d.Method.AUGMENTED_LS)
    rel = np.linalg.norm(sol.f_lambda - f.values) / np.linalg.norm(f.values)
    print(f"  lambda = {lam:9.3g}: reconstruction rel err {rel:.3f}")
print("\nthe corner is a reasonable starting point; a slightly larger lambda")
print("usually costs little misfit while suppressing far more noise")
