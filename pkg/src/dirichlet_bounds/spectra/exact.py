"""Closed-form Dirichlet spectra of rectangles and disks."""

import heapq
import math

import numpy as np

from ..errors import InputError
from .base import DISK, RECTANGLE, Spectrum
from .bessel import bessel_zeros_below


def rectangle_spectrum(a, b, kmax):
    """The ``kmax`` smallest ``pi^2 (m^2/a^2 + n^2/b^2)``, ``m, n >= 1``.

    Best-first enumeration: each popped ``(m, n)`` pushes ``(m, n + 1)``, and
    ``(m + 1, 1)`` when ``n = 1``, so every pair enters the heap exactly once.
    """
    if a <= 0 or b <= 0:
        raise InputError("side lengths must be positive")
    if kmax <= 0:
        return Spectrum(np.empty(0), RECTANGLE)
    ia, ib = 1.0 / (a * a), 1.0 / (b * b)
    heap = [(ia + ib, 1, 1)]
    vals = []
    while len(vals) < kmax:
        q, m, n = heapq.heappop(heap)
        vals.append(math.pi**2 * q)
        heapq.heappush(heap, (m * m * ia + (n + 1) ** 2 * ib, m, n + 1))
        if n == 1:
            heapq.heappush(heap, ((m + 1) ** 2 * ia + ib, m + 1, 1))
    return Spectrum(np.array(vals), RECTANGLE)


def rectangle_modes(a, b, kmax):
    """``(m, n)`` pairs in the order of :func:`rectangle_spectrum`."""
    ia, ib = 1.0 / (a * a), 1.0 / (b * b)
    heap = [(ia + ib, 1, 1)]
    out = []
    while len(out) < kmax:
        _, m, n = heapq.heappop(heap)
        out.append((m, n))
        heapq.heappush(heap, (m * m * ia + (n + 1) ** 2 * ib, m, n + 1))
        if n == 1:
            heapq.heappush(heap, ((m + 1) ** 2 * ia + ib, m + 1, 1))
    return out


def disk_spectrum(R, kmax, rtol=1e-12):
    """The ``kmax`` smallest ``j_{m,i}^2 / R^2``, counting ``m >= 1`` twice."""
    if R <= 0:
        raise InputError("radius must be positive")
    if kmax <= 0:
        return Spectrum(np.empty(0), DISK)
    # two-term Weyl count for the unit disk: N(x^2) ~ x^2/4 - x/2
    x = 2.0 * (1.0 + math.sqrt(1.0 + kmax)) + 4.0
    while True:
        ms, _, js = bessel_zeros_below(x, rtol)
        mult = np.where(ms == 0, 1, 2)
        if mult.sum() >= kmax + 2:
            break
        x *= 1.2
    vals = np.repeat(js, mult)[:kmax]
    return Spectrum(vals**2 / R**2, DISK)
