"""Independent Dirichlet eigenvalue oracles."""

from .base import DISK, RECTANGLE, Spectrum, partial_sums
from .bessel import bessel_j, bessel_j_table, bessel_zero, bessel_zeros_below
from .exact import disk_spectrum, rectangle_modes, rectangle_spectrum
from .fd import fd_laplacian, fd_spectrum, grid_mask, square_fd_exact
from .lanczos import lowest_eigenpairs
