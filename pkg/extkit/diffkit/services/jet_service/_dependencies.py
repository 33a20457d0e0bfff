import numpy as np

from extkit.diffkit.models.scalar_field import ScalarField
from extkit.shared.exceptions import DimensionMismatchError, SingularPointError


def validate_point_dimension(field: ScalarField, x: np.ndarray):
    if x.shape[0] != field.dim:
        raise DimensionMismatchError(
            f"Point dimension {x.shape[0]} does not match field dimension {field.dim}"
        )


def validate_point_is_regular(field: ScalarField, x: np.ndarray):
    if field.is_singular(x):
        raise SingularPointError("The point lies in the singular set of the field")
