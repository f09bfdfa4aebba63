"""Lower bounds for sums of Dirichlet Laplacian eigenvalues on planar domains.

Submodules: :mod:`geometry` (polygons, arcs, tilings), :mod:`constants`
(explicit constants and the derivative-growth recurrence), :mod:`bounds`,
:mod:`minimizers`, :mod:`discrete`, :mod:`lemmas1d` and :mod:`spectra`.
"""

from . import bounds, constants, discrete, geometry, lemmas1d, minimizers, spectra
from .bounds import (
    functional_lower_chain,
    general_corrected_bound,
    li_yau_individual,
    li_yau_sum,
    melas_bounds,
    polygon_corrected_bound,
    weyl_two_term,
)
from .constants import C0, C1, C2, C3, C_TILDE_2, constants_table
from .errors import ConvergenceError, InputError, ResolutionError, ThresholdError
from .geometry import Polygon, SmoothArc
from .spectra import Spectrum, disk_spectrum, fd_spectrum, partial_sums, rectangle_spectrum

__version__ = "0.1.0"
