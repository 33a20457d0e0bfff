import numpy as np

from extkit.shared.exceptions import ServiceValidationError


def validate_finite_argument(x: float):
    if not np.isfinite(x):
        raise ServiceValidationError("The argument must be finite")


def validate_finite_u(u: float):
    if not np.isfinite(u):
        raise ServiceValidationError("u must be finite")
