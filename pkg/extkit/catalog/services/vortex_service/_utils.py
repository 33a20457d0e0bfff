import numpy as np

from extkit.catalog.systems.vortex import TILDE


def to_tilde(point: np.ndarray) -> np.ndarray:
    """(X1, X2, Y1, Y2) to (X1t, X2t, Y1t, Y2t)."""
    return TILDE @ point


def from_tilde(point: np.ndarray) -> np.ndarray:
    """X1 = X2t + X1t, X2 = X2t - X1t, Y1 = (Y1t + Y2t)/2, Y2 = (Y2t - Y1t)/2."""
    x1t, x2t, y1t, y2t = point
    return np.array([x2t + x1t, x2t - x1t, (y1t + y2t) / 2, (y2t - y1t) / 2])
