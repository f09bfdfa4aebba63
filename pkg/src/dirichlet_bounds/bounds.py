"""Lower bounds for Dirichlet eigenvalue sums in the plane, and the two-term Weyl law."""

import csv
import io
import math
import warnings
from dataclasses import dataclass, field

from .constants import C3, C_TILDE_2, epsilon_k
from .errors import InputError
from .geometry import moment_of_inertia, polygon_side_threshold
from .minimizers import LARGE_K, SMALL_K, melas_branch_point, melas_slope

# coefficient of the small-k Melas branch, without the L and k powers
_SMALL_K_COEF = (1.0 - 10.0 * 2.0 ** (-5.0 / 3.0) * 3.0 ** (-4.0 / 3.0)) * 0.3 * (2.0 / math.pi) ** (2.0 / 3.0)


def heaviside(x):
    """Step function with ``Theta(0) = 0``."""
    return 1.0 if x > 0 else 0.0


def li_yau_sum(V, k):
    return 2.0 * math.pi * k * k / V


def li_yau_individual(V, k):
    return 2.0 * math.pi * k / V


def melas_bounds(V, I, k):
    """Return ``(uniform, branch, tag)``.

    ``uniform = 2 pi k^2 / V + V k / (32 I)``.  ``branch`` is the sharper
    estimate from the slope-bounded minimizer: the large-k form when
    ``k >= V^2 / (48 pi I)`` and the cone form otherwise.  ``k`` may be real.
    """
    if I <= 0:
        raise InputError("moment of inertia must be positive")
    if I < V * V / (2.0 * math.pi) * (1 - 1e-12):
        warnings.warn("I < V^2 / (2 pi): no planar domain has these data", stacklevel=2)
    uniform = li_yau_sum(V, k) + V * k / (32.0 * I)
    if k >= melas_branch_point(V, I):
        return uniform, uniform, LARGE_K
    L = melas_slope(V, I)
    return uniform, _SMALL_K_COEF * L ** (-2.0 / 3.0) * k ** (5.0 / 3.0), SMALL_K


@dataclass(frozen=True)
class CorrectedBound:
    """``value = liYau + correction + melas_part``, with the summands kept separately."""

    value: float
    active: tuple  # indices of the boundary pieces whose step factor is 1
    thresholds: tuple
    correction: float = 0.0
    melas_part: float = 0.0


def _corrected(V, I, k, alpha, lengths, thresholds, coef):
    if not 0.0 <= alpha <= 1.0:
        raise InputError("alpha must lie in [0, 1]")
    active = tuple(j for j, t in enumerate(thresholds) if heaviside(k - t))
    melas = (1.0 - alpha) * V * k / (32.0 * I)
    corr = 0.0
    if active and alpha > 0.0:
        total = math.fsum(lengths[j] for j in active)
        corr = coef * alpha * C3 * k ** (1.5 - epsilon_k(k)) * V**-1.5 * total
    return CorrectedBound(li_yau_sum(V, k) + corr + melas, active, tuple(thresholds), corr, melas)


def polygon_thresholds(P):
    return [polygon_side_threshold(P, j) for j in range(P.n)]


def polygon_corrected_bound(P, k, alpha, thresholds=None, I=None):
    """Corrected bound for a polygon; side ``j`` contributes once ``k > 9 V / (2 pi d_j^2)``.

    ``thresholds`` and ``I`` may be passed in to avoid recomputing them across many ``k``.
    """
    thresholds = polygon_thresholds(P) if thresholds is None else thresholds
    I = moment_of_inertia(P)[0] if I is None else I
    return _corrected(P.area, I, k, alpha, P.side_lengths, thresholds, 4.0)


def general_corrected_bound(V, I, arcs, k, alpha):
    """Corrected bound for a domain with smooth boundary pieces.

    ``arcs`` is a sequence of ``(L_j, k_j)`` pairs; piece ``j`` contributes
    once ``k > k_j``.  Infinite thresholds are fine and never activate.
    """
    lengths = [float(L) for L, _ in arcs]
    thresholds = [float(t) for _, t in arcs]
    return _corrected(V, I, k, alpha, lengths, thresholds, 1.0)


def weyl_two_term(V, perimeter, k):
    return li_yau_sum(V, k) + C_TILDE_2 * perimeter / V**1.5 * k**1.5


def functional_lower_chain(V, M, lam):
    """``lam^2 V^2 / (8 pi^3 M)`` for a cap value ``0 < M``."""
    if M <= 0:
        raise InputError("cap value M must be positive")
    if M > V / (4.0 * math.pi**2) * (1 + 1e-12):
        warnings.warn("M exceeds the pointwise bound V / (4 pi^2)", stacklevel=2)
    return lam * lam * V * V / (8.0 * math.pi**3 * M)


# -- reports ----------------------------------------------------------------

@dataclass
class BoundReport:
    k: int
    liYau: float
    melasUniform: float
    melasBranch: float
    branchTag: str
    corrected: dict = field(default_factory=dict)  # alpha -> value
    activeSides: tuple = ()
    weylTwoTerm: float = math.nan
    trueSum: float = None
    thresholds: tuple = ()

    def satisfied(self, rel_slack=0.0):
        """True when ``trueSum`` is at least every bound (vacuous without ``trueSum``)."""
        if self.trueSum is None:
            return True
        floor = self.trueSum * (1 + rel_slack)
        return all(v <= floor for v in (self.liYau, self.melasUniform, *self.corrected.values()))


def _alphas(alpha):
    return sorted({0.0, 1.0, float(alpha)})


def polygon_reports(P, kmax, alpha=0.5, true_sums=None):
    """One :class:`BoundReport` per ``k = 1..kmax``; ``alpha`` is reported with the endpoints 0 and 1."""
    V, per = P.area, P.perimeter
    I = moment_of_inertia(P)[0]
    thr = polygon_thresholds(P)
    out = []
    for k in range(1, kmax + 1):
        uni, br, tag = melas_bounds(V, I, k)
        corr = {a: polygon_corrected_bound(P, k, a, thr, I) for a in _alphas(alpha)}
        ts = None if true_sums is None or k > len(true_sums) else float(true_sums[k - 1])
        out.append(BoundReport(k, li_yau_sum(V, k), uni, br, tag,
                               {a: c.value for a, c in corr.items()}, corr[float(alpha)].active,
                               weyl_two_term(V, per, k), ts, tuple(thr)))
    return out


def general_reports(V, I, perimeter, arcs, kmax, alpha=0.5, true_sums=None):
    out = []
    for k in range(1, kmax + 1):
        uni, br, tag = melas_bounds(V, I, k)
        corr = {a: general_corrected_bound(V, I, arcs, k, a) for a in _alphas(alpha)}
        ts = None if true_sums is None or k > len(true_sums) else float(true_sums[k - 1])
        out.append(BoundReport(k, li_yau_sum(V, k), uni, br, tag,
                               {a: c.value for a, c in corr.items()}, corr[float(alpha)].active,
                               weyl_two_term(V, perimeter, k), ts, tuple(t for _, t in arcs)))
    return out


CSV_COLUMNS = ("k", "trueSum", "liYau", "melasUniform", "melasBranch", "corrected", "weyl2", "activeSides")


def reports_to_csv(reports, alpha=0.5):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in reports:
        w.writerow([r.k, "" if r.trueSum is None else repr(r.trueSum), repr(r.liYau), repr(r.melasUniform),
                    repr(r.melasBranch), repr(r.corrected[float(alpha)]), repr(r.weylTwoTerm),
                    " ".join(map(str, r.activeSides))])
    return buf.getvalue()
