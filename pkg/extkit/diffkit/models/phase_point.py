from typing import Optional, Sequence

import numpy as np

from extkit.shared.exceptions import DimensionMismatchError, ServiceValidationError

PhasePoint = np.ndarray


def as_phase_point(coords: Sequence[float], dim: Optional[int] = None) -> PhasePoint:
    point = np.asarray(coords, dtype=float).reshape(-1)
    if dim is not None and point.shape[0] != dim:
        raise DimensionMismatchError(
            f"Point dimension {point.shape[0]} does not match expected dimension {dim}"
        )
    if not np.all(np.isfinite(point)):
        raise ServiceValidationError("Point coordinates must be finite")
    return point
