"""How tight are the eigenvalue-sum lower bounds on a unit square?

The Dirichlet spectrum of a rectangle is known in closed form, so every
bound can be compared against the true partial sums.  Run with

    python3 demos/square_bounds.py
"""

import math

from dirichlet_bounds.bounds import polygon_reports
from dirichlet_bounds.geometry import Polygon, moment_of_inertia
from dirichlet_bounds.spectra import rectangle_spectrum

square = Polygon.rectangle(1.0, 1.0)
V = square.area
I = moment_of_inertia(square)[0]
print(f"area {V:g}, polar moment about the centroid {I:.6f} (= 1/6)")

# %%
# True sums for the first 200 eigenvalues: pi^2 (m^2 + n^2), m, n >= 1.
kmax = 200
spec = rectangle_spectrum(1.0, 1.0, kmax)
sums = spec.cumulative()

# %%
# One report per k.  The corrected bound is shown at alpha = 1/2, splitting
# the gain between the boundary term and the inertia term.
reports = polygon_reports(square, kmax, alpha=0.5, true_sums=sums)
print(f"\n{'k':>4} {'true':>12} {'sum bound':>12} {'inertia':>12} {'corrected':>12} {'ratio':>7}")
for r in reports:
    if r.k in (1, 2, 5, 10, 20, 50, 100, 200):
        print(f"{r.k:>4} {r.trueSum:12.4f} {r.liYau:12.4f} {r.melasUniform:12.4f} "
              f"{r.corrected[0.5]:12.4f} {r.corrected[0.5] / r.trueSum:7.4f}")

assert all(r.satisfied() for r in reports)
print("\nevery bound sits below the true sum for k = 1..200")

# %%
# The boundary term only switches on once k passes 9 V / (2 pi d_j^2).  For
# the square every side has d_j = 1/3, so the threshold is 81 / (2 pi).
thr = reports[0].thresholds[0]
first_active = next(r.k for r in reports if r.activeSides)
print(f"side threshold {thr:.4f} (81/2pi = {81 / (2 * math.pi):.4f}); first active k = {first_active}")

# %%
# The boundary gain itself is tiny: the constant in front of it is of order
# 1e-5, so against the inertia term it is invisible at these k.
r = reports[-1]
print(f"k = {r.k}: corrected(alpha=1) - sum bound = {r.corrected[1.0] - r.liYau:.3e}, "
      f"inertia term = {r.melasUniform - r.liYau:.3e}")
