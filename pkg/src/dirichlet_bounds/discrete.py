"""Projected-gradient minimisation of the radial energy over a discrete profile space.

Profiles are continuous piecewise-linear on the grid ``r_i = i dr``,
``i = 0..N``, with ``Phi(r_N) = 0``.  Mass and energy are linear in the nodal
values with exact hat-function weights, so every discrete feasible profile is
an admissible continuous one and the discrete minimum can only sit above the
analytic minimum.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, InputError
from .minimizers import cap_height, melas_slope, phi_corrected, phi_li_yau, phi_melas, profile_energy

# steps grow geometrically up to this multiple of the first one; larger
# steps cost digits in the projection through cancellation
STEP_GROWTH = 2.0**20

_GX, _GW = np.polynomial.legendre.leggauss(3)  # exact for the degree-4 integrands


def hat_weights(N, dr):
    """``(m_i, e_i)`` with ``2 pi int hat_i r dr`` and ``2 pi int hat_i r^3 dr``, ``i = 0..N-1``."""
    r = np.arange(N + 1) * dr
    a, b = r[:-1], r[1:]
    x = 0.5 * (b - a)[:, None] * (_GX + 1.0) + a[:, None]
    w = 0.5 * (b - a)[:, None] * _GW
    up = (x - a[:, None]) / dr  # hat rising on cell [a, b] towards node i+1
    down = 1.0 - up  # hat falling from node i
    m, e = np.zeros(N + 1), np.zeros(N + 1)
    for weights, n in ((m, 1), (e, 3)):
        xn = x**n * w
        weights[:-1] += (down * xn).sum(1)
        weights[1:] += (up * xn).sum(1)
    return 2 * math.pi * m[:-1], 2 * math.pi * e[:-1]


def pav_nonincreasing(y, w):
    """Weighted least-squares projection of ``y`` onto nonincreasing sequences (pool adjacent violators)."""
    vals, wts, lens = [], [], []
    for yi, wi in zip(y, w):
        vals.append(yi)
        wts.append(wi)
        lens.append(1)
        while len(vals) > 1 and vals[-2] < vals[-1]:
            v, wt, ln = vals.pop(), wts.pop(), lens.pop()
            vals[-1] = (vals[-1] * wts[-1] + v * wt) / (wts[-1] + wt)
            wts[-1] += wt
            lens[-1] += ln
    return np.repeat(vals, lens)


def _bisect(fun, target, lo, hi, iters=200):
    """Root of a nonincreasing ``fun(x) = target`` on ``[lo, hi]``."""
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        if fun(mid) > target:
            lo = mid
        else:
            hi = mid
        if hi - lo <= 1e-15 * max(abs(lo), abs(hi)):
            break
    return 0.5 * (lo + hi)


def project_monotone(y, m, cap, k):
    """Project onto ``{cap >= Phi_0 >= ... >= 0, sum m_i Phi_i = k}`` in the ``m``-weighted norm.

    The projection is ``clip(PAV(y) - mu, 0, cap)``; the mass is monotone in
    the shift ``mu``, which is found by bisection.
    """
    z = pav_nonincreasing(y, m)
    mass = lambda mu: float(m @ np.clip(z - mu, 0.0, cap))  # noqa: E731
    span = float(np.abs(z).max()) + cap
    mu = _bisect(mass, k, -span, span)
    return np.clip(z - mu, 0.0, cap)


def project_slope(y, Mc, u, H, k):
    """Euclidean projection of decrements ``g`` onto ``{0 <= g <= u, sum g <= H, Mc . g = k}``.

    KKT: ``g = clip(y - mu Mc - nu, 0, u)`` with ``nu >= 0``; ``mu`` by inner
    bisection for each ``nu``, ``nu`` by outer bisection on the height budget.
    """
    def g_of(nu):
        mass = lambda mu: float(Mc @ np.clip(y - mu * Mc - nu, 0.0, u))  # noqa: E731
        span = (float(np.abs(y).max()) + u + abs(nu)) / float(Mc[Mc > 0].min())
        mu = _bisect(mass, k, -span, span)
        return np.clip(y - mu * Mc - nu, 0.0, u)

    g = g_of(0.0)
    if g.sum() <= H:
        return g
    hi = float(np.abs(y).max()) + u
    nu = _bisect(lambda v: float(g_of(v).sum()), H, 0.0, hi, iters=100)
    return g_of(nu)


@dataclass(frozen=True)
class DiscreteResult:
    r: np.ndarray
    phi: np.ndarray
    energy: float
    mass: float
    iterations: int


def discrete_minimize(kind, V, k, N, I=None, eps=0.0, delta=0.5, radius=None, tol=1e-9, max_iter=2000):
    """Minimise the energy over the discrete profile space with ``N`` cells.

    ``kind`` is ``"ly"`` (cap ``V / 4 pi^2``), ``"corrected"`` (cap lowered
    by ``eps k^-delta``) or ``"melas"`` (cap plus slope bound ``L``).  The
    grid covers ``[0, radius]``; by default 1.25 times the analytic support.
    """
    H = cap_height(V)
    if kind == "ly":
        cap, ref = H, phi_li_yau(V, k)
    elif kind == "corrected":
        ref = phi_corrected(V, eps, delta, k)
        cap = float(ref.values[0])
    elif kind == "melas":
        cap, ref = H, phi_melas(V, I, k)
    else:
        raise InputError(f"unknown profile kind {kind!r}")
    R = radius or 1.25 * float(ref.breakpoints[-1])
    dr = R / N
    m, e = hat_weights(N, dr)
    if float(m.sum()) * cap < k:
        raise InputError("grid radius too small to carry mass k")

    if kind != "melas":
        phi = project_monotone(np.full(N, cap), m, cap, k)
        step = cap / float((e / m).max())
        max_step = STEP_GROWTH * step
        for it in range(1, max_iter + 1):
            new = project_monotone(phi - step * e / m, m, cap, k)
            moved = float(np.abs(new - phi).max())
            phi = new
            step = min(2.0 * step, max_step)
            if moved <= tol * cap:
                break
        else:
            raise ConvergenceError("projected gradient did not settle")
        phi = project_monotone(phi, m, cap, k)
    else:
        # decrements g_j = Phi_j - Phi_{j+1}; Phi_i = sum_{j >= i} g_j
        u = melas_slope(V, I) * dr
        Mc, Ec = np.cumsum(m), np.cumsum(e)
        g = project_slope(np.full(N, u), Mc, u, cap, k)
        step = u / float(Ec.max())
        max_step = STEP_GROWTH * step
        for it in range(1, max_iter + 1):
            new = project_slope(g - step * Ec, Mc, u, cap, k)
            moved = float(np.abs(new - g).max())
            g = new
            step = min(2.0 * step, max_step)
            if moved <= tol * u:
                break
        else:
            raise ConvergenceError("projected gradient did not settle")
        g = project_slope(g, Mc, u, cap, k)
        phi = np.cumsum(g[::-1])[::-1]
    r = np.arange(N + 1) * dr
    return DiscreteResult(r, np.append(phi, 0.0), float(e @ phi), float(m @ phi), it)


@dataclass(frozen=True)
class ConvergenceStudy:
    sizes: tuple
    energies: np.ndarray
    analytic: float
    gaps: np.ndarray  # relative (discrete - analytic) / analytic
    order: float


def convergence_study(kind, V, k, sizes=(2**7, 2**8, 2**9, 2**10), **kw):
    """Discrete minima over a sequence of grids and the fitted order of ``gap ~ N^-order``."""
    if kind == "ly":
        ref = phi_li_yau(V, k)
    elif kind == "corrected":
        ref = phi_corrected(V, kw.get("eps", 0.0), kw.get("delta", 0.5), k)
    else:
        ref = phi_melas(V, kw["I"], k)
    analytic = profile_energy(ref)
    energies = np.array([discrete_minimize(kind, V, k, N, **kw).energy for N in sizes])
    gaps = (energies - analytic) / analytic
    pos = np.maximum(gaps, 1e-300)
    order = -float(np.polyfit(np.log(sizes), np.log(pos), 1)[0])
    return ConvergenceStudy(tuple(sizes), energies, analytic, gaps, order)
