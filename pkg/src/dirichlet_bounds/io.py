"""Domain descriptions read from JSON.

A domain file holds one of

* ``{"vertices": [[x, y], ...]}`` for a polygon,
* ``{"disk": {"radius": R}}`` for a disk,
* ``{"rectangle": {"a": a, "b": b}}`` as shorthand for an axis-aligned rectangle.
"""

import json
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import InputError
from .geometry import Polygon, SmoothArc, arc_partition, kj_threshold


@dataclass(frozen=True)
class Domain:
    kind: str  # "polygon" | "disk"
    polygon: Optional[Polygon] = None
    radius: float = math.nan

    @property
    def rectangle_sides(self):
        """``(a, b)`` when the polygon is an axis-aligned rectangle, else ``None``."""
        if self.polygon is None or self.polygon.n != 4:
            return None
        v = self.polygon.vertices
        xs, ys = np.unique(np.round(v[:, 0], 14)), np.unique(np.round(v[:, 1], 14))
        if len(xs) == 2 and len(ys) == 2:
            return float(xs[1] - xs[0]), float(ys[1] - ys[0])
        return None


def load_domain(data):
    if isinstance(data, (str, bytes)) or hasattr(data, "read"):
        data = json.loads(data.read() if hasattr(data, "read") else data)
    if "vertices" in data:
        return Domain("polygon", Polygon.from_json(data))
    if "rectangle" in data:
        r = data["rectangle"]
        return Domain("polygon", Polygon.rectangle(float(r["a"]), float(r["b"])))
    if "disk" in data:
        R = float(data["disk"]["radius"])
        if R <= 0:
            raise InputError("radius must be positive")
        return Domain("disk", radius=R)
    raise InputError("domain JSON needs 'vertices', 'rectangle' or 'disk'")


def read_domain(path):
    with open(path) as fh:
        return load_domain(json.load(fh))


def disk_data(R, nsamples=4097):
    """``(V, I, perimeter, [(L, k_j)])`` for a disk, with the whole circle as one smooth piece."""
    arc = SmoothArc.circle(R, nsamples=nsamples)
    part = arc_partition(arc)
    V = math.pi * R * R
    return V, 0.5 * math.pi * R**4, 2 * math.pi * R, [(arc.length, kj_threshold(arc, part, V))]
