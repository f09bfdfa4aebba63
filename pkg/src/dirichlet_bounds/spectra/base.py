"""Spectrum container and partial sums."""

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..errors import InputError

RECTANGLE = "exact-rectangle"
DISK = "exact-disk"


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Sorted Dirichlet eigenvalues with an origin tag.

    ``errors`` holds per-eigenvalue discretization error estimates when the
    source is numerical, otherwise ``None``.
    """

    eigenvalues: np.ndarray
    source: str
    errors: Optional[np.ndarray] = None

    def __post_init__(self):
        ev = np.asarray(self.eigenvalues, dtype=float).reshape(-1)
        if len(ev) and (np.any(np.diff(ev) < 0) or ev[0] <= 0):
            raise InputError("eigenvalues must be positive and sorted")
        object.__setattr__(self, "eigenvalues", ev)
        if self.errors is not None:
            object.__setattr__(self, "errors", np.asarray(self.errors, dtype=float).reshape(-1))

    @property
    def count(self):
        return len(self.eigenvalues)

    def __len__(self):
        return self.count

    def cumulative(self):
        """All partial sums ``sum_{j<=k} lambda_j`` for ``k = 1..count``."""
        return np.cumsum(self.eigenvalues)

    def counting(self, lam):
        """``#{j : lambda_j <= lam}``; only meaningful for ``lam`` up to the last stored value."""
        return int(np.searchsorted(self.eigenvalues, lam, side="right"))


def partial_sums(S, k):
    if not 0 <= k <= S.count:
        raise InputError(f"k = {k} outside 0..{S.count}")
    return math.fsum(S.eigenvalues[:k])


def fd_source(h, extrapolated):
    return f"finite-difference(h={h:g}, extrapolated={'yes' if extrapolated else 'no'})"
