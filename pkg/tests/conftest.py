import math

import numpy as np
from hypothesis import strategies as st

from dirichlet_bounds.geometry import Polygon


def star_polygon(rng, n=None, jitter=0.6):
    """Random simple counterclockwise polygon: sorted angles, random radii."""
    n = n or int(rng.integers(3, 25))
    # one vertex per sector keeps every angular gap below pi: star-shaped about 0
    ang = 2 * math.pi * (np.arange(n) + 0.4 * rng.random(n)) / n
    rad = 1.0 + jitter * (rng.random(n) - 0.5) * 2 * 0.9
    pts = np.column_stack([rad * np.cos(ang), rad * np.sin(ang)])
    return Polygon(pts)


@st.composite
def polygons(draw):
    seed = draw(st.integers(0, 2**32 - 1))
    return star_polygon(np.random.default_rng(seed))
