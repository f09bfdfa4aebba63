"""Boundary tiling by short arcs and the squares attached to them."""

import math
from dataclasses import dataclass

import numpy as np

from ..errors import ThresholdError
from .arcs import N_PARTS


@dataclass(frozen=True)
class Tiling:
    """Arcs ``(b, b')`` along interior pieces and one square per arc.

    ``squares`` has shape ``(m, 4, 2)`` (corners, counterclockwise);
    ``frames`` rows are ``(origin_x, origin_y, tx, ty, nx, ny)`` with ``t`` the
    unit chord direction and ``n`` the unit normal pointing into the domain.
    ``coverage`` rows are ``(piece_length, covered_length)`` per interior piece.
    """

    lam: float
    arcs: np.ndarray
    squares: np.ndarray
    frames: np.ndarray
    coverage: np.ndarray
    disjoint: bool

    @property
    def side(self):
        return 0.5 / math.sqrt(self.lam)

    @property
    def arc_length(self):
        return math.sqrt(2.0 / self.lam)


def tiling_thresholds(arc, partition, lam):
    """Return the list of violated threshold inequalities (empty when ``lam`` is admissible)."""
    r = 1.0 / math.sqrt(lam)
    d, kappa, L = partition.d, arc.kappa_max, arc.length
    bad = []
    if r > d / 3.0:
        bad.append(f"lambda^-1/2 = {r:.6g} > d/3 = {d / 3:.6g}")
    if partition.case == N_PARTS:
        cap = math.pi / (8.0 * math.sqrt(2.0) * kappa)
        if r > cap:
            bad.append(f"lambda^-1/2 = {r:.6g} > pi/(8 sqrt2 kappa) = {cap:.6g}")
    elif r > L / (3.0 * math.sqrt(2.0)):
        bad.append(f"lambda^-1/2 = {r:.6g} > L/(3 sqrt2) = {L / (3 * math.sqrt(2)):.6g}")
    if lam <= 6.0 * kappa / d:
        bad.append(f"lambda = {lam:.6g} <= 6 kappa/d = {6 * kappa / d:.6g}")
    return bad


def _exterior_normal(arc, inside, mid, t, s_mid, offset):
    """Unit normal pointing from the chord towards the exterior offset line."""
    left = np.array([-t[1], t[0]])
    h = max(offset, 1e-9 * np.hypot(*t) * arc.length)
    if inside is None:
        # counterclockwise convention: the domain lies to the left of the curve
        on_curve = arc.point_at(s_mid)
        inside = lambda p: float((p - on_curve) @ left) > 0  # noqa: E731
    plus_in, minus_in = inside(mid + h * left), inside(mid - h * left)
    if minus_in and not plus_in:
        return left
    return -left


def tile_arc(arc, partition, lam, inside=None):
    """Place arcs of length ``sqrt(2/lam)`` on every interior piece and build the squares.

    Each interior piece of length ``S`` gets ``m = floor(S / a)`` arcs of
    length ``a = sqrt(2) lam^-1/2`` separated by equal gaps.  For each arc the
    two lines parallel to its chord at offset ``2^(3/2) kappa / lam`` are
    formed; the one whose midpoint lies outside the domain carries the outer
    side of a square of side ``lam^-1/2 / 2`` centred on the chord midpoint.

    ``inside(point) -> bool`` is a point-in-domain test; by default the domain
    is taken to lie to the left of the arc direction.
    Raises :class:`ThresholdError` when ``lam`` is below any threshold.
    """
    bad = tiling_thresholds(arc, partition, lam)
    if bad:
        raise ThresholdError("; ".join(bad))
    a = math.sqrt(2.0 / lam)
    side = 0.5 / math.sqrt(lam)
    offset = 2.0**1.5 * arc.kappa_max / lam

    arcs, squares, frames, coverage = [], [], [], []
    for i in partition.interior_pieces:
        s0, s1 = partition.piece(i)
        S = s1 - s0
        m = int(math.floor(S / a * (1 + 1e-12)))
        gap = (S - m * a) / (m + 1)
        starts = s0 + gap + np.arange(m) * (a + gap)
        coverage.append((S, m * a))
        for b in starts:
            pb, pb2 = arc.point_at(np.array([b, b + a]))
            chord = pb2 - pb
            t = chord / np.hypot(*chord)
            mid = 0.5 * (pb + pb2)
            nrm = _exterior_normal(arc, inside, mid, t, b + 0.5 * a, offset)
            inward = -nrm
            top = mid + offset * nrm
            half = 0.5 * side
            c0 = top - half * t
            c1 = top + half * t
            squares.append([c0, c0 + side * inward, c1 + side * inward, c1])
            frames.append([*pb, *t, *inward])
            arcs.append((b, b + a))
    squares = np.array(squares).reshape(-1, 4, 2)
    squares = np.array([sq if _signed_area(sq) > 0 else sq[::-1] for sq in squares]).reshape(-1, 4, 2)
    return Tiling(lam, np.array(arcs).reshape(-1, 2), squares, np.array(frames).reshape(-1, 6),
                  np.array(coverage).reshape(-1, 2), squares_disjoint(squares))


def _signed_area(q):
    x, y = q[:, 0], q[:, 1]
    return 0.5 * float(np.sum(x * np.roll(y, -1) - np.roll(x, -1) * y))


def squares_disjoint(squares, tol=1e-12):
    """Pairwise separating-axis test; squares that only touch count as disjoint."""
    sq = np.asarray(squares, dtype=float)
    m = len(sq)
    if m < 2:
        return True
    edges = np.roll(sq, -1, axis=1) - sq
    axes = np.stack([-edges[..., 1], edges[..., 0]], axis=-1)[:, :2]
    axes /= np.linalg.norm(axes, axis=-1, keepdims=True)
    scale = tol * float(np.abs(sq).max() + 1.0)
    i, j = np.triu_indices(m, k=1)
    for s in range(0, len(i), 1 << 16):
        ii, jj = i[s:s + (1 << 16)], j[s:s + (1 << 16)]
        separated = np.zeros(len(ii), dtype=bool)
        for owner in (ii, jj):
            for k in range(2):
                ax = axes[owner, k]
                pa = np.einsum("pcd,pd->pc", sq[ii], ax)
                pb = np.einsum("pcd,pd->pc", sq[jj], ax)
                separated |= (pa.max(1) <= pb.min(1) + scale) | (pb.max(1) <= pa.min(1) + scale)
        if not separated.all():
            return False
    return True


def square_count_lower(length, lam, polygon_case=True):
    """Guaranteed number of squares: ``[l lam^1/2 / (3 sqrt2)]`` for polygon sides,
    ``[L lam^1/2 / (9 sqrt2)]`` for smooth pieces."""
    if lam <= 0:
        return 0
    div = 3.0 if polygon_case else 9.0
    return int(math.floor(length * math.sqrt(lam) / (div * math.sqrt(2.0)) * (1 + 1e-14)))


@dataclass(frozen=True)
class ExtendedVolume:
    bound: float
    doubled_ok: bool
    lambda1: float


def extended_volume_bound(arcs, V, lam):
    """Upper bound on the area of the bumped domain.

    ``V + 2^(3/2) / lam * sum kappa_j L_j``; once ``lam >= 9 * 2^10 * max kappa_j^2``
    the bound ``2 V`` also applies and the smaller of the two is returned.
    """
    kappas = [a.kappa_max for a in arcs]
    extra = 2.0**1.5 / lam * math.fsum(k * a.length for k, a in zip(kappas, arcs))
    lambda1 = 9.0 * 2.0**10 * max(kappas, default=0.0) ** 2
    doubled = lam >= lambda1
    bound = V + extra
    if doubled:
        bound = min(bound, 2.0 * V)
    return ExtendedVolume(bound, doubled, lambda1)
