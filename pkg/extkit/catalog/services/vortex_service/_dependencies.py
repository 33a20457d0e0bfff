import numpy as np

from extkit.catalog.schemas.entry_schema import VortexParams
from extkit.catalog.systems.vortex import equal_q
from extkit.shared.exceptions import DimensionMismatchError, ServiceValidationError


def validate_vortex_point(point: np.ndarray):
    if point.shape[0] != 4:
        raise DimensionMismatchError("A two-vortex point has 4 coordinates")


def validate_intensities(k1: float, k2: float):
    if k1 == 0 or k2 == 0:
        raise ServiceValidationError("Vortex intensities cannot be zero")


def validate_level_set(params: VortexParams, point: np.ndarray):
    if equal_q(params, point[0], point[2]) <= 0:
        raise ServiceValidationError("The vortices coincide at this point")
