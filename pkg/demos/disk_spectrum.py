"""Disk eigenvalues from Bessel zeros, and what the bounds say about them.

The Dirichlet eigenvalues of a disk of radius R are ``(j_{m,i} / R)^2``,
with the m >= 1 values counted twice.  The zeros come from a Miller backward
recurrence for the Bessel functions followed by bisection.
"""

import math

import numpy as np
from scipy import special

from dirichlet_bounds.bounds import general_reports
from dirichlet_bounds.io import disk_data
from dirichlet_bounds.spectra import bessel_zero, disk_spectrum

# %%
# Sanity check of the zero finder against scipy for a few orders.
for m in (0, 1, 5, 20):
    ours = np.array([bessel_zero(m, i) for i in range(1, 6)])
    ref = special.jn_zeros(m, 5)
    print(f"J_{m:<2d} first five zeros, max rel. deviation from scipy: {np.max(np.abs(ours / ref - 1)):.1e}")

# %%
# Bounds against the unit-disk spectrum.
R = 1.0
V, I, per, arcs = disk_data(R)
kmax = 150
spec = disk_spectrum(R, kmax)
print(f"\nlambda_1 = {spec.eigenvalues[0]:.10f}  (j_01^2 = {special.jn_zeros(0, 1)[0] ** 2:.10f})")
reports = general_reports(V, I, per, arcs, kmax, alpha=0.5, true_sums=spec.cumulative())
for r in reports[::30]:
    print(f"k = {r.k:>3}: true {r.trueSum:10.3f}  inertia bound {r.melasUniform:10.3f}  "
          f"two-term Weyl {r.weylTwoTerm:10.3f}")
assert all(r.satisfied() for r in reports)

# %%
# The circle is a single smooth boundary piece whose activation threshold k_j
# is astronomically large, so the boundary correction never contributes here.
L, kj = arcs[0]
print(f"\nperimeter {L:.6f}, activation threshold k_j ~ 10^{math.log10(kj):.1f}")
