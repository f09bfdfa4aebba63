"""Simple planar polygons and the metric data the eigenvalue bounds use."""

import math
import warnings
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from ..errors import InputError
from ._distance import _pairwise, point_segment_distance, segment_set_distance

_REL_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class Polygon:
    """Simple, counterclockwise polygon.

    ``vertices`` is an ``(n, 2)`` array without the closing repeat of the
    first vertex.  Construction validates simplicity and orientation.
    """

    vertices: np.ndarray

    def __post_init__(self):
        v = np.array(self.vertices, dtype=float)
        if v.ndim != 2 or v.shape[1] != 2:
            raise InputError("vertices must be an (n, 2) array")
        if len(v) > 3 and np.allclose(v[0], v[-1]):
            v = v[:-1]
        if len(v) < 3:
            raise InputError("a polygon needs at least 3 vertices")
        v.setflags(write=False)
        object.__setattr__(self, "vertices", v)
        area = _signed_area(v)
        scale = float(np.ptp(v, axis=0).max()) or 1.0
        if abs(area) <= _REL_TOL * scale**2:
            raise InputError("polygon has zero area")
        if area < 0:
            raise InputError("polygon must be counterclockwise")
        if not _is_simple(v):
            raise InputError("polygon is not simple")

    @classmethod
    def from_json(cls, data):
        return cls(np.asarray(data["vertices"], dtype=float))

    def to_json(self):
        return {"vertices": self.vertices.tolist()}

    @classmethod
    def rectangle(cls, a, b, origin=(0.0, 0.0)):
        x0, y0 = origin
        return cls(np.array([[x0, y0], [x0 + a, y0], [x0 + a, y0 + b], [x0, y0 + b]]))

    @classmethod
    def regular(cls, n, area=1.0, center=(0.0, 0.0)):
        """Regular ``n``-gon of the given area."""
        # area = (n/2) R^2 sin(2 pi / n)
        radius = math.sqrt(2.0 * area / (n * math.sin(2.0 * math.pi / n)))
        t = 2.0 * np.pi * np.arange(n) / n
        return cls(np.column_stack([center[0] + radius * np.cos(t), center[1] + radius * np.sin(t)]))

    def transformed(self, rotation=0.0, shift=(0.0, 0.0), scale=1.0):
        c, s = math.cos(rotation), math.sin(rotation)
        rot = np.array([[c, -s], [s, c]])
        return Polygon(scale * self.vertices @ rot.T + np.asarray(shift, dtype=float))

    @property
    def n(self):
        return len(self.vertices)

    @cached_property
    def sides(self):
        """Side segments, shape ``(n, 2, 2)``; side ``j`` runs from vertex ``j`` to ``j + 1``."""
        return np.stack([self.vertices, np.roll(self.vertices, -1, axis=0)], axis=1)

    @cached_property
    def side_lengths(self):
        d = self.sides[:, 1] - self.sides[:, 0]
        return np.hypot(d[:, 0], d[:, 1])

    @cached_property
    def area(self):
        return _signed_area(self.vertices)

    @property
    def perimeter(self):
        return float(math.fsum(self.side_lengths))

    @cached_property
    def centroid(self):
        v = self.vertices - self.vertices.mean(axis=0)
        x, y = v[:, 0], v[:, 1]
        xn, yn = np.roll(x, -1), np.roll(y, -1)
        cross = x * yn - xn * y
        a = 0.5 * cross.sum()
        cx = ((x + xn) * cross).sum() / (6.0 * a)
        cy = ((y + yn) * cross).sum() / (6.0 * a)
        return np.array([cx, cy]) + self.vertices.mean(axis=0)

    def contains(self, points, strict=True, tol=None):
        """Point-in-polygon test by crossing number.

        With ``strict=True`` points within ``tol`` of the boundary count as
        outside.  ``tol`` defaults to ``1e-12`` times the polygon diameter.
        """
        pts = np.asarray(points, dtype=float)
        flat = pts.reshape(-1, 2)
        if tol is None:
            tol = _REL_TOL * float(np.ptp(self.vertices, axis=0).max())
        x, y = flat[:, 0:1], flat[:, 1:2]
        a, b = self.sides[:, 0], self.sides[:, 1]
        ax, ay, bx, by = a[:, 0], a[:, 1], b[:, 0], b[:, 1]
        straddles = (ay > y) != (by > y)
        with np.errstate(divide="ignore", invalid="ignore"):
            x_cross = ax + (y - ay) * (bx - ax) / (by - ay)
        inside = (np.count_nonzero(straddles & (x < x_cross), axis=1) % 2) == 1
        on_edge = np.zeros(len(flat), dtype=bool)
        # distance to the boundary, in chunks to bound memory
        for s in range(0, len(flat), 4096):
            blk = flat[s:s + 4096, None, :]
            dist = point_segment_distance(blk, a[None], b[None]).min(axis=1)
            on_edge[s:s + 4096] = dist <= tol
        result = inside & ~on_edge if strict else inside | on_edge
        return result.reshape(pts.shape[:-1])


def _signed_area(v):
    v = v - v.mean(axis=0)
    x, y = v[:, 0], v[:, 1]
    return 0.5 * float(np.sum(x * np.roll(y, -1) - np.roll(x, -1) * y))


def _is_simple(v):
    n = len(v)
    sides = np.stack([v, np.roll(v, -1, axis=0)], axis=1)
    scale = float(np.ptp(v, axis=0).max())
    d = _pairwise(sides, sides)
    i, j = np.triu_indices(n, k=1)
    adjacent = (j == i + 1) | ((i == 0) & (j == n - 1))
    if np.any(d[i[~adjacent], j[~adjacent]] <= _REL_TOL * scale):
        return False
    # adjacent sides may only share their common vertex: reject fold-backs
    e = sides[:, 1] - sides[:, 0]
    en = np.roll(e, -1, axis=0)
    cross = e[:, 0] * en[:, 1] - e[:, 1] * en[:, 0]
    dot = np.einsum("ij,ij->i", e, en)
    if np.any(np.hypot(e[:, 0], e[:, 1]) <= _REL_TOL * scale):
        return False
    return not np.any((np.abs(cross) <= _REL_TOL * scale**2) & (dot < 0))


def polygon_metrics(P):
    """Area, side lengths, perimeter and area centroid of ``P``."""
    return P.area, P.side_lengths.copy(), P.perimeter, P.centroid.copy()


def moment_of_inertia(P):
    """Polar moment of inertia about the centroid and the centroid itself.

    The centroid minimizes ``a -> integral |x - a|^2`` over the polygon, so the
    returned pair is ``(I, argmin)``.  Second moments come from the exact
    shoelace-type formulas, evaluated in a frame shifted to the vertex mean.
    """
    shift = P.vertices.mean(axis=0)
    v = P.vertices - shift
    x, y = v[:, 0], v[:, 1]
    xn, yn = np.roll(x, -1), np.roll(y, -1)
    cross = x * yn - xn * y
    ixx = math.fsum((x * x + x * xn + xn * xn) * cross) / 12.0
    iyy = math.fsum((y * y + y * yn + yn * yn) * cross) / 12.0
    c = P.centroid - shift
    inertia = ixx + iyy - P.area * float(c @ c)
    return inertia, P.centroid.copy()


def inertia_about(P, a):
    """``integral over P of |x - a|^2``, by the parallel-axis identity."""
    inertia, c = moment_of_inertia(P)
    d = np.asarray(a, dtype=float) - c
    return inertia + P.area * float(d @ d)


def middle_third(P, j):
    a, b = P.sides[j]
    return np.array([(2.0 * a + b) / 3.0, (a + 2.0 * b) / 3.0])


def middle_third_distance(P, j):
    """Distance from the closed middle third of side ``j`` to all other closed sides.

    Adjacent sides are included.  A zero result means the middle third touches
    the rest of the boundary; a warning is emitted and callers should treat the
    side as permanently inactive.
    """
    if not 0 <= j < P.n:
        raise IndexError(f"side index {j} out of range for {P.n} sides")
    others = np.delete(P.sides, j, axis=0)
    d = segment_set_distance(middle_third(P, j)[None], others)
    scale = float(np.ptp(P.vertices, axis=0).max())
    if d <= _REL_TOL * scale:
        warnings.warn(f"side {j}: middle third touches the boundary (d_j = 0)", stacklevel=2)
        return 0.0
    return d


def polygon_side_threshold(P, j):
    """Activation level ``9 V / (2 pi d_j^2)`` for side ``j``; ``inf`` when ``d_j = 0``."""
    d = middle_third_distance(P, j)
    if d == 0.0:
        return math.inf
    return 9.0 * P.area / (2.0 * math.pi * d * d)
