"""Derivative inequalities for trigonometric polynomials on a short interval.

For ``f`` on ``[0, l]`` with ``l = lam^(-1/2) / 2`` the suite checks a
sup-norm estimate, two derivative dichotomies and a lower bound on how far
``f`` stays from any pure phase ``exp(i(a t + b))``.
"""

import math

import numpy as np

from dirichlet_bounds.lemmas1d import TrigPolynomial, one_d_lemma_suite, random_trig_polynomial

rng = np.random.default_rng(9)
lam = 1.0
fails = 0
for n in range(100):
    f = random_trig_polynomial(rng, degree=5, complex_valued=n % 2 == 1).vanishing_at_zero()
    rep = one_d_lemma_suite(f, lam, p=3)
    fails += not rep.ok
print(f"100 random polynomials, {fails} with a failed check")

# %%
# The ratio m0 m2 / m1^2 (maxima of |f|, |f'|, |f''|) can fall on either side
# of 1/4.  A fast sine on the interval shows it sitting above.
f = TrigPolynomial(np.array([40.0]), np.array([0.0]), np.array([1.0]))
rep = one_d_lemma_suite(f, lam, p=2)
m0, m1, m2 = rep.details["re"]["maxima"][:3]
print(f"sin(40 t): m0 m2 / m1^2 = {m0 * m2 / m1**2:.4f}, second option m1 <= 32 m0: {m1 <= 32 * m0}")

# %%
# Phase distance for sin(2 pi t) against the certified lower bound.
g = TrigPolynomial(np.array([2 * math.pi]), np.array([0.0]), np.array([1.0]))
rep = one_d_lemma_suite(g, lam, p=2)
inf_val, bound, C = rep.details["phase"]
print(f"sin(2 pi t): phase distance {inf_val:.4e} >= bound {bound:.4e}")
