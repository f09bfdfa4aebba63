"""Vectorized point/segment distance kernels.

Segments are arrays of shape ``(n, 2, 2)``: ``seg[i, 0]`` is the start point
and ``seg[i, 1]`` the end point.  A polyline with ``m`` vertices becomes
``m - 1`` segments; a bare point cloud becomes degenerate segments.
"""

import numpy as np

_CHUNK = 1 << 20  # max pairs evaluated per block


def polyline_segments(points):
    """Consecutive segments of a polyline; a single point yields one degenerate segment."""
    pts = np.asarray(points, dtype=float).reshape(-1, 2)
    if len(pts) == 1:
        return np.stack([pts, pts], axis=1)
    return np.stack([pts[:-1], pts[1:]], axis=1)


def point_segment_distance(p, a, b):
    """Broadcasting distance from points ``p`` to segments ``[a, b]``."""
    ab = b - a
    ap = p - a
    denom = np.einsum("...i,...i->...", ab, ab)
    with np.errstate(invalid="ignore", divide="ignore"):
        t = np.einsum("...i,...i->...", ap, ab) / denom
    t = np.where(denom > 0, np.clip(t, 0.0, 1.0), 0.0)
    closest = a + t[..., None] * ab
    return np.hypot(*np.moveaxis(p - closest, -1, 0))


def _cross(u, v):
    return u[..., 0] * v[..., 1] - u[..., 1] * v[..., 0]


def _segments_cross(a0, a1, b0, b1):
    # proper or touching intersection, via orientation signs
    d1 = _cross(b1 - b0, a0 - b0)
    d2 = _cross(b1 - b0, a1 - b0)
    d3 = _cross(a1 - a0, b0 - a0)
    d4 = _cross(a1 - a0, b1 - a0)
    return (d1 * d2 < 0) & (d3 * d4 < 0)


def _pairwise(sa, sb):
    a0, a1 = sa[:, None, 0], sa[:, None, 1]
    b0, b1 = sb[None, :, 0], sb[None, :, 1]
    d = np.minimum.reduce([
        point_segment_distance(a0, b0, b1),
        point_segment_distance(a1, b0, b1),
        point_segment_distance(b0, a0, a1),
        point_segment_distance(b1, a0, a1),
    ])
    return np.where(_segments_cross(a0, a1, b0, b1), 0.0, d)


def segment_set_distance(sa, sb):
    """Minimum distance between two unions of closed segments.

    Brute force over all pairs, evaluated in blocks so memory stays bounded.
    Returns ``inf`` if either set is empty.
    """
    sa = np.asarray(sa, dtype=float).reshape(-1, 2, 2)
    sb = np.asarray(sb, dtype=float).reshape(-1, 2, 2)
    if len(sa) == 0 or len(sb) == 0:
        return np.inf
    rows = max(1, _CHUNK // len(sb))
    best = np.inf
    for start in range(0, len(sa), rows):
        best = min(best, float(_pairwise(sa[start:start + rows], sb).min()))
        if best == 0.0:
            break
    return best
