import math
from typing import Sequence

import numpy as np

from extkit.diffkit.models.scalar_field import ScalarField
from extkit.poisson.models.poisson_structure import PoissonStructure
from extkit.shared.exceptions import (
    DimensionMismatchError,
    ServiceValidationError,
    SingularPointError,
)


def validate_step(h: float):
    if not (math.isfinite(h) and h > 0):
        raise ServiceValidationError("h must be positive")


def _check_dimension(structure: PoissonStructure, field: ScalarField):
    if field.dim != structure.dim:
        raise DimensionMismatchError(
            f"Field dimension {field.dim} does not match "
            f"structure dimension {structure.dim}"
        )


def _check_state(structure: PoissonStructure, state: np.ndarray):
    if state.shape[0] != structure.dim:
        raise DimensionMismatchError(
            f"State dimension {state.shape[0]} does not match "
            f"structure dimension {structure.dim}"
        )


def validate_bracket_arguments(
    structure: PoissonStructure, f: ScalarField, g: ScalarField, state: np.ndarray
):
    _check_dimension(structure, f)
    _check_dimension(structure, g)
    _check_state(structure, state)


def validate_neighbourhood(
    structure: PoissonStructure,
    f: ScalarField,
    g: ScalarField,
    state: np.ndarray,
    h: float,
):
    margin = 2.0 * h
    if (
        structure.is_singular(state, margin)
        or f.is_singular(state, margin)
        or g.is_singular(state, margin)
    ):
        raise SingularPointError("The state lies within 2h of a singular set")


def validate_rank_arguments(
    fields: Sequence[ScalarField],
    structure: PoissonStructure,
    states: Sequence[np.ndarray],
):
    if not states:
        raise ServiceValidationError("At least one state is required")
    if not fields:
        raise ServiceValidationError("At least one field is required")
    for field in fields:
        _check_dimension(structure, field)
    for state in states:
        _check_state(structure, state)
