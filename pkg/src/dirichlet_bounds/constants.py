"""Explicit constants, the derivative-growth recurrence, and related helpers.

All constants are computed from their defining formulas.  ``constants_table``
evaluates them in double precision, or with mpmath at a chosen number of
decimal digits for cross-checks.
"""

import math
from dataclasses import dataclass, asdict
from functools import lru_cache

import mpmath

from .errors import InputError


@dataclass(frozen=True)
class ConstantsTable:
    c0: float
    c1: float
    c2: float
    c3: float
    c_tilde_2: float
    c1_proof: float  # sqrt(3 pi / 2) * c0^(-1/2), the proof-internal form of c1

    def as_dict(self):
        return {k: float(v) for k, v in asdict(self).items()}


def _table(m):
    # m is the math-like namespace: ``math`` or ``mpmath`` (with mpf arithmetic)
    pi = m.pi
    c0 = m.mpf(7) * m.mpf(10) ** 22 if m is mpmath else 7.0 * 10.0**22
    one = m.mpf(1) if m is mpmath else 1.0
    c1 = m.sqrt(3 * pi / 14) * (m.mpf(10) ** -11 if m is mpmath else 10.0**-11)
    k = one / (8 * 9 * m.sqrt(2) * 36)
    c2 = k * c1 ** (-one / 2)
    c3 = k * (2 * pi) ** (5 * one / 4) * c1 ** (one / 4)
    d = 2
    c_tilde = (m.sqrt(pi) * m.gamma(2 + one * d / 2) ** (1 + one / d)
               / ((d + 1) * m.gamma(3 * one / 2 + one * d / 2) * m.gamma(2 * one) ** (one / d)))
    c1_proof = m.sqrt(3 * pi / 2) * c0 ** (-one / 2)
    return ConstantsTable(c0, c1, c2, c3, c_tilde, c1_proof)


def constants_table(dps=None):
    """The constant table in double precision, or in mpmath at ``dps`` digits."""
    if dps is None:
        return _table(math)
    with mpmath.workdps(dps):
        return _table(mpmath)


_T = constants_table()
C0, C1, C2, C3, C_TILDE_2 = _T.c0, _T.c1, _T.c2, _T.c3, _T.c_tilde_2


def c3_chain_ratio(k, c1=C1):
    """Ratio of ``4 c3`` to the coefficient obtained by substituting ``lam = 2 pi k / V``
    into ``c2 c1^2 (V lam / c1)^(3/2 - eps)``.

    Equals ``4 (c1 / 2 pi)^(1/4 - eps(k))``; it is 1 only if ``eps(k)`` happens
    to make the two sides agree, so it documents rather than asserts the chain.
    """
    eps = epsilon_k(k, c1)
    c2 = C2 if c1 == C1 else C2 * math.sqrt(C1 / c1)
    c3 = C3 if c1 == C1 else C3 * (c1 / C1) ** 0.25
    chain = c2 * c1 ** (0.5 + eps) * (2 * math.pi) ** (1.5 - eps)
    return 4 * c3 / chain


def epsilon_k(k, c1=C1):
    """``2 / sqrt(log2(2 pi k / c1))``."""
    arg = 2.0 * math.pi * k / c1
    if not arg > 1.0:
        raise InputError(f"log2 argument 2 pi k / c1 = {arg} must exceed 1")
    return 2.0 / math.sqrt(math.log2(arg))


# -- recurrence A_n(p) ------------------------------------------------------

def _coefficients(p):
    return 3 + 726 * 4**6 * p**4, 150 * 9**2 * p**2


@lru_cache(maxsize=None)
def _a_values(p, n):
    alpha, beta = _coefficients(p)
    vals = [1, 1]
    for _ in range(2, n + 1):
        vals.append(alpha * vals[-2] + beta * vals[-1])
    return tuple(vals[: n + 1])


def log2_int(x):
    """``log2`` of a positive integer of any size."""
    bl = x.bit_length()
    if bl <= 1000:
        return math.log2(x)
    shift = bl - 64
    return shift + math.log2(x >> shift)


def a_seq(p, n):
    """Exact ``A_n(p)`` and its ``log2``."""
    if p < 1 or n < 0:
        raise InputError("need p >= 1 and n >= 0")
    v = _a_values(p, max(n, 1))[n]
    return v, log2_int(v)


def a_seq_log2(p, n):
    """``log2 A_n(p)`` computed entirely in the log domain (independent of :func:`a_seq`)."""
    alpha, beta = _coefficients(p)
    la, lb = math.log2(alpha), math.log2(beta)
    prev, cur = 0.0, 0.0
    for _ in range(2, n + 1):
        # log2(alpha 2^prev + beta 2^cur), factored around the larger exponent
        x, y = la + prev, lb + cur
        hi, lo = max(x, y), min(x, y)
        prev, cur = cur, hi + math.log2(1.0 + 2.0 ** (lo - hi))
    return cur if n >= 1 else 0.0


@dataclass(frozen=True)
class GrowthRow:
    p: int
    log2_a: float
    log2_bound: float
    ok: bool


def a_growth_check(p_max, c0_numerator=7, c0_exponent=22):
    """Compare ``A_p(p)`` with ``c0 2^((p+1)^2)`` for ``p = 1..p_max``.

    ``ok`` comes from an exact integer comparison; the log columns are for display.
    """
    if p_max > 64:
        raise InputError("p_max is limited to 64")
    rows = []
    c0 = c0_numerator * 10**c0_exponent
    for p in range(1, p_max + 1):
        a, la = a_seq(p, p)
        bound = c0 * 2 ** ((p + 1) ** 2)
        rows.append(GrowthRow(p, la, log2_int(bound), a <= bound))
    return rows


def optimal_p(V, lam, c1=C1):
    """``[sqrt(2 log2(V lam / c1))] - 1``, clamped to at least 1."""
    ratio = V * lam / c1
    if not ratio > 1.0:
        raise InputError(f"V lam / c1 = {ratio} must exceed 1")
    p = int(math.floor(math.sqrt(2.0 * math.log2(ratio)) + 1e-12))
    return max(p - 1, 1)


def log2_beta_sq(p, V, general=False):
    """``log2`` of ``A_p(p) V^2 / (4 pi)`` (or ``/ pi`` for the bumped-domain variant)."""
    _, la = a_seq(p, p)
    return la + 2 * math.log2(V) - math.log2(math.pi if general else 4 * math.pi)


def beta_sq(p, V, general=False):
    """``A_p(p) V^2 / (4 pi)``; ``inf`` if it overflows (use :func:`log2_beta_sq`)."""
    a, la = a_seq(p, p)
    if la < 1000:
        return float(a) * V * V / (math.pi if general else 4.0 * math.pi)
    lb = log2_beta_sq(p, V, general)
    return 2.0**lb if lb < 1023 else math.inf


def counting_bound(V, lam):
    """Upper bound ``V lam / (4 pi)`` on the number of eigenvalues ``<= lam``."""
    return V * lam / (4.0 * math.pi)
