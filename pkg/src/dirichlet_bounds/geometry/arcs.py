"""Arclength-sampled C^2 boundary pieces.

A :class:`SmoothArc` stores samples ``(s, x, y, kappa)``.  Analytic primitives
(circle, ellipse, segment) also keep an exact ``param`` callable so that
points at arbitrary arclength are exact rather than interpolated.
"""

import math
import warnings
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np
from scipy import integrate

from ..errors import InputError
from ._distance import polyline_segments, segment_set_distance

THREE_PARTS = "three-parts"
N_PARTS = "n-parts"


@dataclass(frozen=True, eq=False)
class SmoothArc:
    s: np.ndarray
    points: np.ndarray
    kappa: np.ndarray
    param: Optional[Callable] = field(default=None, repr=False)

    def __post_init__(self):
        s = np.asarray(self.s, dtype=float)
        pts = np.asarray(self.points, dtype=float).reshape(-1, 2)
        kap = np.asarray(self.kappa, dtype=float)
        if not (len(s) == len(pts) == len(kap)) or len(s) < 2:
            raise InputError("an arc needs at least two matching (s, x, y, kappa) samples")
        if abs(s[0]) > 0.0:
            raise InputError("arclength must start at 0")
        ds = np.diff(s)
        if np.any(ds <= 0):
            raise InputError("arclength samples must be strictly increasing")
        chords = np.hypot(*np.diff(pts, axis=0).T)
        if np.any(chords > ds * (1 + 1e-9) + 1e-12 * s[-1]):
            raise InputError("chord between consecutive samples exceeds their arclength")
        for name, arr in (("s", s), ("points", pts), ("kappa", kap)):
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)

    # -- construction -----------------------------------------------------

    @classmethod
    def from_samples(cls, samples):
        arr = np.asarray(samples, dtype=float)
        return cls(arr[:, 0], arr[:, 1:3], arr[:, 3])

    @classmethod
    def from_points(cls, points, kappa=None):
        """Arc through ordered points; arclength by chords, curvature by circumradius."""
        pts = np.asarray(points, dtype=float)
        s = np.concatenate([[0.0], np.cumsum(np.hypot(*np.diff(pts, axis=0).T))])
        if kappa is None:
            kappa = three_point_curvature(pts)
        return cls(s, pts, kappa)

    @classmethod
    def circle(cls, radius, center=(0.0, 0.0), start=0.0, sweep=2 * math.pi, nsamples=1025):
        """Counterclockwise circular arc; negative ``sweep`` runs clockwise."""
        cx, cy = center
        sign = 1.0 if sweep >= 0 else -1.0

        def param(s):
            t = start + sign * np.asarray(s, dtype=float) / radius
            return np.stack([cx + radius * np.cos(t), cy + radius * np.sin(t)], axis=-1)

        s = np.linspace(0.0, abs(sweep) * radius, nsamples)
        return cls(s, param(s), np.full(nsamples, sign / radius), param)

    @classmethod
    def segment(cls, p, q, nsamples=65):
        p, q = np.asarray(p, dtype=float), np.asarray(q, dtype=float)
        length = float(np.hypot(*(q - p)))
        unit = (q - p) / length

        def param(s):
            return p + np.asarray(s, dtype=float)[..., None] * unit

        s = np.linspace(0.0, length, nsamples)
        return cls(s, param(s), np.zeros(nsamples), param)

    @classmethod
    def ellipse(cls, a, b, center=(0.0, 0.0), t0=0.0, t1=2 * math.pi, nsamples=1025):
        """Counterclockwise arc of ``(a cos t, b sin t)``, ``t0 <= t <= t1``, sampled uniformly in arclength."""
        cx, cy = center

        def speed(t):
            return np.hypot(a * np.sin(t), b * np.cos(t))

        tt = np.linspace(t0, t1, 64 * nsamples + 1)
        st = integrate.cumulative_simpson(speed(tt), x=tt, initial=0.0)

        def t_of_s(s):
            t = np.interp(s, st, tt)
            for _ in range(2):  # Newton on the arclength integral
                arc = np.array([integrate.quad(speed, t0, ti)[0] for ti in np.ravel(t)])
                t = t - (arc.reshape(np.shape(t)) - s) / speed(t)
            return t

        def param(s):
            t = t_of_s(np.asarray(s, dtype=float))
            return np.stack([cx + a * np.cos(t), cy + b * np.sin(t)], axis=-1)

        length = integrate.quad(speed, t0, t1, limit=200)[0]
        s = np.linspace(0.0, length, nsamples)
        t = t_of_s(s)
        pts = np.stack([cx + a * np.cos(t), cy + b * np.sin(t)], axis=-1)
        kap = a * b / (a * a * np.sin(t) ** 2 + b * b * np.cos(t) ** 2) ** 1.5
        return cls(s, pts, kap, param)

    @classmethod
    def from_json(cls, data):
        if "samples" in data:
            return cls.from_samples(data["samples"])
        prim = data.get("primitive")
        params = dict(data.get("params", {}))
        n = int(data.get("nsamples", 1025))
        if prim == "circle":
            return cls.circle(nsamples=n, **params)
        if prim == "ellipse":
            return cls.ellipse(nsamples=n, **params)
        if prim == "segment":
            return cls.segment(nsamples=n, **params)
        raise InputError(f"unknown arc primitive {prim!r}")

    def to_json(self):
        return {"samples": np.column_stack([self.s, self.points, self.kappa]).tolist()}

    # -- queries ----------------------------------------------------------

    @property
    def length(self):
        return float(self.s[-1])

    @property
    def kappa_max(self):
        return float(np.abs(self.kappa).max())

    @property
    def endpoints(self):
        return self.points[0].copy(), self.points[-1].copy()

    def point_at(self, s):
        s = np.asarray(s, dtype=float)
        if self.param is not None:
            return self.param(s)
        return np.stack([np.interp(s, self.s, self.points[:, 0]),
                         np.interp(s, self.s, self.points[:, 1])], axis=-1)

    def kappa_at(self, s):
        return np.interp(s, self.s, self.kappa)

    def sub_polyline(self, s0, s1, extra=0):
        """Points of the arc between arclengths ``s0 < s1``.

        Includes every stored sample in the open range, the two endpoints, and
        ``extra`` additional evenly spaced parameter values.
        """
        inner = self.s[(self.s > s0) & (self.s < s1)]
        grid = np.union1d(inner, np.linspace(s0, s1, max(extra, 0) + 2))
        return self.point_at(grid), grid


def three_point_curvature(points):
    """Signed curvature ``1/R`` of the circle through each triple of consecutive points.

    Positive for left turns.  End samples copy their neighbours.
    """
    p = np.asarray(points, dtype=float)
    if len(p) < 3:
        return np.zeros(len(p))
    a, b, c = p[:-2], p[1:-1], p[2:]
    ab, bc, ca = b - a, c - b, a - c
    cross = ab[:, 0] * bc[:, 1] - ab[:, 1] * bc[:, 0]
    prod = np.hypot(*ab.T) * np.hypot(*bc.T) * np.hypot(*ca.T)
    k = np.where(prod > 0, 2.0 * cross / np.where(prod > 0, prod, 1.0), 0.0)
    return np.concatenate([[k[0]], k, [k[-1]]])


@dataclass(frozen=True)
class ArcPartition:
    """Equal-length partition of an arc and its gap distances.

    ``breakpoints`` holds ``n + 1`` arclength values.  ``deltas[i]`` is the gap
    of piece ``i`` (``nan`` where undefined), and ``d`` is the governing gap.
    """

    case: str
    breakpoints: np.ndarray
    deltas: np.ndarray
    d: float

    @property
    def n_pieces(self):
        return len(self.breakpoints) - 1

    def piece(self, i):
        return float(self.breakpoints[i]), float(self.breakpoints[i + 1])

    @property
    def interior_pieces(self):
        """Pieces with a neighbour on each side: the middle one in three-parts case."""
        return range(1, self.n_pieces - 1)


def _as_segments(boundary_rest):
    if boundary_rest is None:
        return np.empty((0, 2, 2))
    if isinstance(boundary_rest, np.ndarray) and boundary_rest.ndim == 3:
        return boundary_rest
    if isinstance(boundary_rest, np.ndarray) and boundary_rest.ndim == 2:
        boundary_rest = [boundary_rest]
    segs = [polyline_segments(pl) for pl in boundary_rest if len(pl)]
    return np.concatenate(segs) if segs else np.empty((0, 2, 2))


def partition_case(length, kappa):
    """Three equal parts when ``length <= 3 pi / (8 kappa)`` (inclusive), else ``[8 L kappa / pi]`` parts."""
    if kappa == 0 or length <= 3.0 * math.pi / (8.0 * kappa) * (1 + 1e-12):
        return THREE_PARTS, 3
    return N_PARTS, int(math.floor(8.0 * length * kappa / math.pi))


def arc_partition(arc, boundary_rest=None):
    """Partition ``arc`` into equal pieces and compute the gap distance ``d``.

    Parameters
    ----------
    arc : SmoothArc
    boundary_rest : array or list of arrays, optional
        The rest of the domain boundary as polylines (each ``(m, 2)``) or as
        segments ``(m, 2, 2)``.  Single points are allowed.

    Returns
    -------
    ArcPartition
        In the three-parts case ``d`` is the distance from the middle piece to
        ``boundary_rest``.  Otherwise ``deltas[i]`` is the distance from piece
        ``i`` to everything except pieces ``i - 1, i, i + 1``, and ``d`` is the
        minimum over the pieces that have two neighbours.
    """
    case, n = partition_case(arc.length, arc.kappa_max)
    bps = np.linspace(0.0, arc.length, n + 1)
    rest = _as_segments(boundary_rest)
    pieces = [polyline_segments(arc.sub_polyline(bps[i], bps[i + 1])[0]) for i in range(n)]
    deltas = np.full(n, np.nan)
    for i in range(1, n - 1):
        # three-parts: only the rest of the boundary; otherwise also the non-adjacent pieces
        far = [pieces[m] for m in range(n) if abs(m - i) > 1] if case == N_PARTS else []
        deltas[i] = segment_set_distance(pieces[i], np.concatenate(far + [rest]))
    d = float(np.nanmin(deltas)) if n > 2 else math.inf
    if math.isinf(d):
        warnings.warn("no boundary left to measure the gap against: d = inf", stacklevel=2)
    return ArcPartition(case, bps, deltas, d)


def lambda3(kappa_j, V, kappa_global_max, c1):
    return max(9.0 * 2.0**10 * kappa_global_max**2,
               2.0**64 * c1 / V,
               2.0**22 * 6.0**8 * kappa_j**4 * V / c1)


def kj_threshold(arc, partition, V, kappa_global_max=None, c1=None):
    """Activation index ``k_j`` for a smooth boundary piece.

    ``kappa_global_max`` is the largest curvature over all pieces of the same
    domain (defaults to this arc's).  Returns ``inf`` when ``d = 0``.
    """
    from ..constants import C1

    c1 = C1 if c1 is None else c1
    kappa = arc.kappa_max
    kmax = kappa if kappa_global_max is None else max(kappa_global_max, kappa)
    d = partition.d
    if d == 0.0:
        return math.inf
    terms = [lambda3(kappa, V, kmax, c1), 9.0 / d**2, 128.0 * kappa**2 / math.pi**2, 6.0 * kappa / d]
    return V / (2.0 * math.pi) * max(terms)


@dataclass(frozen=True)
class ChordCheck:
    u0: float
    max_sagitta: float
    ok: bool
    precondition: bool
    diagnostic: str = ""


def chord_graph_check(arc, s1, s2, nextra=256, tol=1e-12):
    """Check the chord-length and graph/sagitta bounds for the sub-arc ``[s1, s2]``.

    The sub-arc's own maximal curvature ``kappa0`` is used.  When
    ``kappa0 |s2 - s1| > pi/4`` no claim is made (``precondition=False``).
    """
    lo, hi = sorted((float(s1), float(s2)))
    span = hi - lo
    pts, grid = arc.sub_polyline(lo, hi, extra=nextra)
    kappa0 = float(np.abs(arc.kappa_at(grid)).max()) if span > 0 else 0.0
    a, b = pts[0], pts[-1]
    chord = b - a
    u0 = float(np.hypot(*chord))
    if kappa0 * span > math.pi / 4 * (1 + 1e-12):
        return ChordCheck(u0, math.nan, False, False, "kappa0 * |s' - s''| exceeds pi/4")
    if u0 == 0.0:
        return ChordCheck(0.0, 0.0, span == 0.0, True, "" if span == 0.0 else "closed sub-arc")
    e = chord / u0
    rel = pts - a
    u = rel @ e
    v = rel @ np.array([-e[1], e[0]])
    sag = float(np.abs(v).max())
    scale = tol * max(span, 1.0)
    problems = []
    if np.any(np.diff(u) <= -scale) or u.min() < -scale or u.max() > u0 + scale:
        problems.append("sub-arc is not a graph over its chord")
    if not (span / math.sqrt(2) - scale <= u0 <= span + scale):
        problems.append("chord length outside [|ds|/sqrt 2, |ds|]")
    if sag > math.sqrt(2) * kappa0 * u0**2 + scale:
        problems.append("sagitta exceeds sqrt(2) kappa0 u0^2")
    return ChordCheck(u0, sag, not problems, True, "; ".join(problems))
