import math
from typing import Mapping

import numpy as np

from extkit.diffkit.models.scalar_field import ScalarField
from extkit.shared.exceptions import DimensionMismatchError, ServiceValidationError
from extkit.verify.models.trajectory import Trajectory


def validate_t_final(t_final: float):
    if not (math.isfinite(t_final) and t_final > 0):
        raise ServiceValidationError("t_final must be a positive number")


def validate_dt_or_tol(dt_or_tol: float):
    if not (math.isfinite(dt_or_tol) and dt_or_tol > 0):
        raise ServiceValidationError("The step size or tolerance must be positive")


def validate_state0(state0: np.ndarray):
    if not np.all(np.isfinite(state0)):
        raise ServiceValidationError("The initial state must be finite")


def validate_observables(
    trajectory: Trajectory, observables: Mapping[str, ScalarField]
):
    if not observables:
        raise ServiceValidationError("At least one observable is required")
    dim = trajectory.states.shape[1]
    for name, field in observables.items():
        if field.dim != dim:
            raise DimensionMismatchError(
                f"Observable {name} has dimension {field.dim}, expected {dim}"
            )


def validate_every(every: int):
    if every < 1:
        raise ServiceValidationError("every must be a positive integer")
