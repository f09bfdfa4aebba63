"""Numerical checks of the one-dimensional derivative lemmas on trig polynomials.

The functions live on ``[0, l]`` with ``l = lam^(-1/2) / 2``.  Maxima of
derivatives come from a dense grid plus bounded local refinement, L2 norms
from Gauss-Legendre quadrature, so every quantity is computed from the exact
analytic derivatives.
"""

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
from scipy import optimize

from .errors import ResolutionError

SLACK = 1e-9


@lru_cache(maxsize=8)
def _gauss(n):
    return np.polynomial.legendre.leggauss(n)


@dataclass(frozen=True)
class TrigPolynomial:
    """``f(t) = offset + sum_k a_k cos(w_k t) + b_k sin(w_k t)`` with real or complex coefficients."""

    freqs: np.ndarray
    cos_coef: np.ndarray
    sin_coef: np.ndarray
    offset: complex = 0.0

    def derivative_values(self, t, order=0):
        t = np.asarray(t, dtype=float)
        w = np.asarray(self.freqs, dtype=float)
        phase = np.multiply.outer(t, w) + order * math.pi / 2
        val = (w**order * (np.cos(phase) * self.cos_coef + np.sin(phase) * self.sin_coef)).sum(axis=-1)
        if order == 0:
            val = val + self.offset
        return val

    def __call__(self, t):
        return self.derivative_values(t, 0)

    @property
    def is_real(self):
        return not (np.any(np.imag(self.cos_coef)) or np.any(np.imag(self.sin_coef)) or np.imag(self.offset))

    @property
    def real(self):
        return TrigPolynomial(self.freqs, np.real(self.cos_coef), np.real(self.sin_coef), float(np.real(self.offset)))

    @property
    def imag(self):
        return TrigPolynomial(self.freqs, np.imag(self.cos_coef), np.imag(self.sin_coef), float(np.imag(self.offset)))

    def vanishing_at_zero(self):
        """Shift the constant term so that ``f(0) = 0``."""
        return TrigPolynomial(self.freqs, self.cos_coef, self.sin_coef, self.offset - self(0.0))


def random_trig_polynomial(rng, degree=6, base=2 * math.pi, complex_valued=False):
    k = np.arange(1, degree + 1)
    a = rng.normal(size=degree) / k
    b = rng.normal(size=degree) / k
    if complex_valued:
        a = a + 1j * rng.normal(size=degree) / k
        b = b + 1j * rng.normal(size=degree) / k
    return TrigPolynomial(base * k, a, b, complex(rng.normal()) if complex_valued else float(rng.normal()))


class _Sampler:
    def __init__(self, f, length, npts):
        self.f, self.l, self.npts = f, length, npts
        self.t = np.linspace(0.0, length, npts)
        self.gx, self.gw = _gauss(256)
        wmax = float(np.max(np.abs(f.freqs), initial=0.0))
        # at least 8 grid points per period of the fastest mode, and enough Gauss nodes
        if wmax * length / (npts - 1) > math.pi / 4:
            raise ResolutionError(f"{npts} points cannot resolve frequency {wmax:.4g} on [0, {length:.4g}]")
        if wmax * length > 128.0:
            raise ResolutionError(f"frequency {wmax:.4g} too high for 256-node quadrature on [0, {length:.4g}]")

    def sup(self, order):
        def absval(t):
            return float(np.abs(self.f.derivative_values(t, order)))

        vals = np.abs(self.f.derivative_values(self.t, order))
        coarse = np.abs(self.f.derivative_values(self.t[::2], order)).max()
        best_i = int(np.argmax(vals))
        best = float(vals[best_i])
        if best > 0 and (best - coarse) > 1e-3 * best:
            raise ResolutionError(f"max |f^({order})| unresolved on {self.npts} points")
        lo, hi = self.t[max(best_i - 1, 0)], self.t[min(best_i + 1, self.npts - 1)]
        res = optimize.minimize_scalar(lambda t: -absval(t), bounds=(lo, hi), method="bounded",
                                       options={"xatol": 1e-14 * max(self.l, 1e-300)})
        return max(best, -float(res.fun))

    def norm_sq(self, order):
        t = 0.5 * self.l * (self.gx + 1.0)
        vals = np.abs(self.f.derivative_values(t, order)) ** 2
        return 0.5 * self.l * float(vals @ self.gw)


@dataclass
class LemmaReport:
    lam: float
    p: int
    checks: dict = field(default_factory=dict)
    details: dict = field(default_factory=dict)

    @property
    def violations(self):
        return [name for name, ok in self.checks.items() if not ok]

    @property
    def ok(self):
        return not self.violations


def sup_max_lemma(s, p):
    """``max|f^(p)|^2 <= 3/2 (||f^(p)||^2 / l + l ||f^(p+1)||^2)``: returns (lhs, rhs)."""
    lhs = s.sup(p) ** 2
    rhs = 1.5 * (s.norm_sq(p) / s.l + s.l * s.norm_sq(p + 1))
    return lhs, rhs


def dichotomy_second(m0, m1, m2, lam):
    """Which of ``m0 m2 >= m1^2 / 4`` and ``m1 <= 32 lam^(1/2) m0`` hold.

    The first option is the Taylor-step conclusion ``m0 >= -m0 + m1^2 / (2 m2)``,
    the form the derivative-ratio chain in :func:`dichotomy_order_p` relies on.
    The reversed inequality ``m0 m2 <= m1^2 / 4`` is reported by
    :func:`dichotomy_second_reversed`; it is not a valid alternative in general.
    """
    first = m0 * m2 >= 0.25 * m1 * m1 * (1 - SLACK)
    second = m1 <= 32.0 * math.sqrt(lam) * m0 * (1 + SLACK)
    return first, second


def dichotomy_second_reversed(m0, m1, m2, lam):
    """Same as :func:`dichotomy_second` but with ``m0 m2 <= m1^2 / 4`` as the first option."""
    first = m0 * m2 <= 0.25 * m1 * m1 * (1 + SLACK)
    second = m1 <= 32.0 * math.sqrt(lam) * m0 * (1 + SLACK)
    return first, second


def dichotomy_order_p(m0, m1, mp, p, lam):
    """Which of ``m1 <= 4^(p+1/2) lam^(1/2) m0`` and
    ``m1 <= (mp/m0)^(1/p) 4^(p-1/2) m0`` hold."""
    if m0 == 0:
        return m1 == 0, m1 == 0
    first = m1 <= 4.0 ** (p + 0.5) * math.sqrt(lam) * m0 * (1 + SLACK)
    second = m1 <= (mp / m0) ** (1.0 / p) * 4.0 ** (p - 0.5) * m0 * (1 + SLACK)
    return first, second


def phase_infimum(f, length, nodes=None):
    """``inf over phi0, phi1`` of ``int_0^l |f - exp(i(phi1 t + phi0))|^2 dt``.

    The ``phi0`` minimum is exact: the integral equals
    ``||f||^2 + l - 2 |int f e^{-i phi1 t}|``.  The ``phi1`` maximum of the
    modulus is found on a grid spaced ``pi / (8 l)`` over a window that the
    integration-by-parts tail bound certifies, then refined locally.
    """
    gx, gw = _gauss(nodes or 512)
    t = 0.5 * length * (gx + 1.0)
    w = 0.5 * length * gw
    ft = f(t)
    norm_sq = float(np.abs(ft) ** 2 @ w)

    def modulus(phi):
        return np.abs(np.exp(-1j * np.multiply.outer(np.atleast_1d(phi), t)) @ (ft * w))

    wmax = float(np.max(np.abs(f.freqs))) if len(f.freqs) else 0.0
    tail = abs(f(0.0)) + abs(f(length)) + float(np.abs(f.derivative_values(t, 1)) @ w)
    g0 = float(modulus(0.0)[0])
    window = wmax + 64.0 / length
    if g0 > 0:
        window = max(window, min(tail / g0, 1e4 / length))
    step = math.pi / (8.0 * length)
    phis = np.arange(-window, window + step, step)
    vals = modulus(phis)
    best = float(vals.max())
    for i in np.argsort(vals)[-4:]:
        res = optimize.minimize_scalar(lambda ph: -float(modulus(ph)[0]),
                                       bounds=(phis[i] - step, phis[i] + step), method="bounded")
        best = max(best, -float(res.fun))
    return norm_sq + length - 2.0 * best


def phase_bound_rhs(p, C, lam):
    return lam**-0.5 / 9.0 * min(4.0 ** (-p - 2.5),
                                 4.0 ** (-(p + 3) / 2.0) * 6.0 ** (1.0 / p) * C ** (-1.0 / p) * lam ** (-1.0 / p))


def one_d_lemma_suite(f, lam, p, npts=4097):
    """Run the derivative lemmas on ``f`` over ``[0, lam^(-1/2) / 2]``.

    Checks the sup-norm lemma for ``f``; both dichotomies for the real and
    imaginary parts; and, when ``f(0) = 0``, the phase lower bound with
    ``C(p) = max|f^(p)| / lam^(p/2 + 1)``.  Raises :class:`ResolutionError`
    when ``npts`` cannot resolve the derivative maxima.
    """
    length = 0.5 / math.sqrt(lam)
    rep = LemmaReport(lam, p)
    s = _Sampler(f, length, npts)

    lhs, rhs = sup_max_lemma(s, p)
    rep.checks["max"] = lhs <= rhs * (1 + SLACK)
    rep.details["max"] = (lhs, rhs)

    parts = [("re", f.real)]
    if not f.is_real:
        parts.append(("im", f.imag))
    for tag, g in parts:
        sg = _Sampler(g, length, npts)
        m = [sg.sup(i) for i in range(max(p, 2) + 1)]
        one, two = dichotomy_second(m[0], m[1], m[2], lam)
        rep.checks[f"second[{tag}]"] = one or two
        a, b = dichotomy_order_p(m[0], m[1], m[p], p, lam)
        rep.checks[f"order_p[{tag}]"] = a or b
        rev = dichotomy_second_reversed(m[0], m[1], m[2], lam)
        rep.details[tag] = {"maxima": m, "second": (one, two), "second_reversed": rev, "order_p": (a, b)}

    if abs(f(0.0)) <= 1e-12 * max(1.0, s.sup(0)):
        mp = s.sup(p)
        C = mp / lam ** (p / 2.0 + 1.0)
        if C > 0:
            inf_val = phase_infimum(f, length)
            bound = phase_bound_rhs(p, C, lam)
            rep.checks["phase"] = inf_val >= bound * (1 - SLACK)
            rep.details["phase"] = (inf_val, bound, C)
    return rep
