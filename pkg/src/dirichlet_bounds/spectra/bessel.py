"""Bessel functions ``J_0 .. J_M`` by Miller's backward recurrence, and their zeros."""

import math

import numpy as np

from ..errors import ConvergenceError

_BIG = 1e250


def _start_order(x, order):
    top = max(float(np.max(x, initial=0.0)), float(order))
    n = int(top + 30 + 12 * top ** (1.0 / 3.0))
    return n + (n % 2)


def bessel_j_table(order, x):
    """``J_m(x)`` for ``m = 0..order``; shape ``(order + 1,) + x.shape``.

    Backward recurrence ``J_{m-1} = (2m/x) J_m - J_{m+1}`` from a start order
    well past ``max(x, order)``, normalised by ``J_0 + 2 sum J_{2j} = 1``.
    Overflow is avoided by rescaling the whole running column.
    """
    x = np.atleast_1d(np.asarray(x, dtype=float))
    shape = x.shape
    x = x.reshape(-1)
    out = np.zeros((order + 1, len(x)))
    small = x == 0.0
    xs = np.where(small, 1.0, x)
    n0 = _start_order(x, order)
    nxt = np.zeros_like(xs)
    cur = np.full_like(xs, 1e-300)
    norm = np.zeros_like(xs)
    for m in range(n0, 0, -1):
        # cur = J_m, nxt = J_{m+1} (unnormalised)
        prev = (2.0 * m / xs) * cur - nxt
        if m <= order:
            out[m] = cur
        if m % 2 == 0:
            norm += 2.0 * cur
        nxt, cur = cur, prev
        big = np.abs(cur) > _BIG
        if big.any():
            scale = np.where(big, 1.0 / _BIG, 1.0)
            cur, nxt, norm = cur * scale, nxt * scale, norm * scale
            out[:, big] *= 1.0 / _BIG
    out[0] = cur
    norm += cur
    out /= norm
    out[:, small] = 0.0
    out[0, small] = 1.0
    return out.reshape((order + 1,) + shape)


def bessel_j(m, x):
    return bessel_j_table(m, x)[m]


def _values_at(orders, x):
    tab = bessel_j_table(int(orders.max()), x)
    return tab[orders, np.arange(len(x))]


def bessel_zeros_below(xmax, rtol=1e-12, step=0.5):
    """All positive zeros ``j_{m,i} <= xmax`` as ``(m, i, j)`` arrays, sorted by ``j``.

    Sign changes on a grid of spacing ``step`` (zeros of one order are more
    than ``3`` apart) bracket each zero; bisection then runs on all brackets
    at once until ``hi - lo <= rtol * lo``.
    """
    grid = np.arange(step, xmax + step, step)
    mmax = int(xmax) + 1
    tab = bessel_j_table(mmax, grid)
    orders, lo, hi = [], [], []
    for m in range(mmax + 1):
        v = tab[m]
        idx = np.nonzero(np.sign(v[:-1]) * np.sign(v[1:]) < 0)[0]
        orders.append(np.full(len(idx), m))
        lo.append(grid[idx])
        hi.append(grid[idx + 1])
    orders = np.concatenate(orders).astype(int)
    lo, hi = np.concatenate(lo), np.concatenate(hi)
    if not len(orders):
        return orders, orders, lo
    flo = _values_at(orders, lo)
    for _ in range(200):
        if np.all(hi - lo <= rtol * lo):
            break
        mid = 0.5 * (lo + hi)
        fm = _values_at(orders, mid)
        left = np.sign(fm) == np.sign(flo)
        lo = np.where(left, mid, lo)
        flo = np.where(left, fm, flo)
        hi = np.where(left, hi, mid)
    else:
        raise ConvergenceError("Bessel zero bisection did not converge")
    roots = 0.5 * (lo + hi)
    keep = roots <= xmax
    orders, roots = orders[keep], roots[keep]
    # zero index within each order, from the sorted roots of that order
    idx = np.zeros(len(orders), dtype=int)
    for m in np.unique(orders):
        sel = np.nonzero(orders == m)[0]
        idx[sel[np.argsort(roots[sel])]] = np.arange(1, len(sel) + 1)
    order = np.argsort(roots, kind="stable")
    return orders[order], idx[order], roots[order]


def bessel_zero(m, i, rtol=1e-12):
    """The ``i``-th positive zero of ``J_m``."""
    xmax = m + math.pi * (i + 0.5 * m + 2)
    ms, ks, js = bessel_zeros_below(xmax, rtol)
    sel = (ms == m) & (ks == i)
    return float(js[sel][0])
