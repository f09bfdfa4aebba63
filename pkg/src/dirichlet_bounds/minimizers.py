"""Radial rearrangement minimizers and their mass/energy functionals.

A profile ``Phi(|xi|)`` is piecewise linear and nonincreasing, and vanishes
beyond its last breakpoint (a jump there is allowed).  Its mass is
``2 pi int Phi(r) r dr`` and its energy ``2 pi int Phi(r) r^3 dr``.
"""

import math
import warnings
from dataclasses import dataclass
from math import comb

import numpy as np
from scipy import integrate

from .errors import InputError

LARGE_K = "large-k"
SMALL_K = "small-k"


@dataclass(frozen=True, eq=False)
class RadialProfile:
    breakpoints: np.ndarray
    values: np.ndarray
    cap: float
    tag: str = ""

    def __post_init__(self):
        r = np.asarray(self.breakpoints, dtype=float)
        v = np.asarray(self.values, dtype=float)
        if r.shape != v.shape or r.ndim != 1 or len(r) < 1:
            raise InputError("breakpoints and values must be matching 1-d arrays")
        if r[0] != 0 or np.any(np.diff(r) < 0):
            raise InputError("breakpoints must start at 0 and be nondecreasing")
        tol = 1e-12 * max(self.cap, 1.0)
        if np.any(np.diff(v) > tol) or v.min() < -tol or v.max() > self.cap + tol:
            raise InputError("profile must be nonincreasing with 0 <= Phi <= cap")
        object.__setattr__(self, "breakpoints", r)
        object.__setattr__(self, "values", v)

    def __call__(self, radius):
        r = np.asarray(radius, dtype=float)
        out = np.interp(r, self.breakpoints, self.values)
        return np.where(r > self.breakpoints[-1], 0.0, out)

    def moment(self, n):
        """``int_0^inf Phi(r) r^n dr``, exact per linear piece."""
        total = []
        r, v = self.breakpoints, self.values
        for r0, r1, v0, v1 in zip(r[:-1], r[1:], v[:-1], v[1:]):
            h = r1 - r0
            if h == 0:
                continue
            slope = (v1 - v0) / h
            # int_0^h (v0 + slope u)(r0 + u)^n du, expanded binomially
            acc = 0.0
            for j in range(n + 1):
                c = comb(n, j) * r0 ** (n - j)
                acc += c * (v0 * h ** (j + 1) / (j + 1) + slope * h ** (j + 2) / (j + 2))
            total.append(acc)
        return math.fsum(total)

    def moment_quad(self, n):
        """Adaptive-quadrature version of :meth:`moment`, piece by piece."""
        r = self.breakpoints
        parts = [integrate.quad(lambda x: float(np.interp(x, r, self.values)) * x**n, a, b,
                                epsabs=0.0, epsrel=1e-13, limit=200)[0]
                 for a, b in zip(r[:-1], r[1:]) if b > a]
        return math.fsum(parts)


def profile_mass(profile):
    return 2.0 * math.pi * profile.moment(1)


def profile_energy(profile):
    return 2.0 * math.pi * profile.moment(3)


def cap_height(V):
    """The pointwise bound ``V / (4 pi^2)``."""
    return V / (4.0 * math.pi**2)


def phi_li_yau(V, k):
    """Flat profile at ``V / 4 pi^2`` up to ``r_k = sqrt(4 pi k / V)``."""
    H = cap_height(V)
    rk = math.sqrt(4.0 * math.pi * k / V)
    return RadialProfile(np.array([0.0, rk]), np.array([H, H]), H, "li-yau")


def melas_slope(V, I):
    """``L = 2 (2 pi)^-2 sqrt(V I)``, the bound on ``|Phi'|``."""
    return 2.0 * (2.0 * math.pi) ** -2 * math.sqrt(V * I)


def melas_branch_point(V, I):
    """``V^2 / (48 pi I)``: large-k branch for ``k`` at or above this value."""
    return V * V / (48.0 * math.pi * I)


def _check_inertia(V, I):
    if I <= 0:
        raise InputError("moment of inertia must be positive")
    if I < V * V / (2.0 * math.pi) * (1 - 1e-12):
        warnings.warn("I < V^2 / (2 pi): no planar domain has these data", stacklevel=3)


def melas_s_k(V, I, k, method="closed"):
    """Radius ``s_k`` where the large-k Melas profile leaves the cap.

    The mass condition is the quadratic ``s^2 + w s + w^2/3 = k / (pi H)`` with
    ``w = H / L``.  ``method="bisect"`` solves the mass condition directly
    instead, on ``[0, t_k]``.
    """
    H, L = cap_height(V), melas_slope(V, I)
    w = H / L
    if method == "closed":
        disc = 4.0 * k / (math.pi * H) - w * w / 3.0
        if disc < 0:
            raise InputError("no real s_k: k is below the large-k branch")
        root = math.sqrt(disc)
        s = (4.0 * k / (math.pi * H) - 4.0 * w * w / 3.0) / (2.0 * (w + root))
    else:
        def excess(s):
            return math.pi * H * (s * s + w * s + w * w / 3.0) - k
        lo, hi = 0.0, max(w, math.sqrt(k / (math.pi * H)))
        if excess(lo) > 0:
            raise InputError("no real s_k >= 0: k is below the large-k branch")
        for _ in range(200):
            mid = 0.5 * (lo + hi)
            if excess(mid) > 0:
                hi = mid
            else:
                lo = mid
            if hi - lo <= 1e-16 * hi:
                break
        s = 0.5 * (lo + hi)
    if s < 0:
        if s > -1e-12 * w:
            return 0.0
        raise InputError("no real s_k >= 0: k is below the large-k branch")
    return s


def phi_melas(V, I, k):
    """Melas minimizer with slope bound ``L``; returns a tagged profile.

    ``k`` may be any positive real so the small-k cone branch can be reached;
    for integer ``k`` on a planar domain the large-k branch always applies.
    """
    _check_inertia(V, I)
    H, L = cap_height(V), melas_slope(V, I)
    if k >= melas_branch_point(V, I):
        s = melas_s_k(V, I, k)
        t = s + H / L
        return RadialProfile(np.array([0.0, s, t]), np.array([H, H, 0.0]), H, LARGE_K)
    h0 = (3.0 * k * L * L / math.pi) ** (1.0 / 3.0)
    return RadialProfile(np.array([0.0, h0 / L]), np.array([h0, 0.0]), H, SMALL_K)


def phi_corrected(V, eps, delta, k):
    """Flat profile at the lowered height ``V / 4 pi^2 - eps k^-delta`` carrying mass ``k``."""
    H = cap_height(V)
    h = H - eps * k ** (-delta)
    if h <= 0:
        raise InputError("eps k^-delta must stay below V / 4 pi^2")
    tau = math.sqrt(k / (math.pi * h))
    return RadialProfile(np.array([0.0, tau]), np.array([h, h]), H, "corrected")


def correction_leading_coefficient(V, eps):
    """Leading coefficient ``8 pi^3 eps / V^2`` of ``k^(2 - delta)`` in the energy excess."""
    return 8.0 * math.pi**3 * eps / V**2


def correction_excess_exact(V, eps, delta, k):
    """Closed form of ``energy(Phi) - 2 pi k^2 / V``:
    ``k^(2-delta) eps / (2 pi H (H - eps k^-delta))``."""
    H = cap_height(V)
    k = np.asarray(k, dtype=float)
    return k ** (2 - delta) * eps / (2.0 * math.pi * H * (H - eps * k ** (-delta)))


@dataclass(frozen=True)
class CorrectionFit:
    ks: np.ndarray
    excess: np.ndarray
    A_empirical: float
    A_analytic: float
    exponent: float


def correction_coefficient(V, eps, delta, ks):
    """Fit ``energy(Phi(k)) - 2 pi k^2 / V ~ A k^(2 - delta)`` over ``ks``.

    ``exponent`` is the free log-log slope; ``A_empirical`` the least-squares
    coefficient with the exponent pinned to ``2 - delta``.
    """
    ks = np.asarray(ks, dtype=float)
    if ks.max() / ks.min() < 10:
        raise InputError("k range spans less than a decade: fit is ill-conditioned")
    excess = np.array([profile_energy(phi_corrected(V, eps, delta, k)) - 2.0 * math.pi * k * k / V
                       for k in ks])
    analytic = correction_leading_coefficient(V, eps)
    if eps == 0:
        return CorrectionFit(ks, excess, 0.0, 0.0, math.nan)
    logk, loge = np.log(ks), np.log(excess)
    slope = float(np.polyfit(logk, loge, 1)[0])
    A = float(np.exp(np.mean(loge - (2 - delta) * logk)))
    return CorrectionFit(ks, excess, A, analytic, slope)
