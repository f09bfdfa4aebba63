"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed or geometrically invalid input."""


class ThresholdError(ValueError):
    """An energy scale is below a threshold a construction needs."""


class ResolutionError(RuntimeError):
    """Sampling is too coarse for a requested estimate to be trusted."""


class ConvergenceError(RuntimeError):
    """An iterative solver ran out of iterations."""
