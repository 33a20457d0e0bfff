import numpy as np
from fast_depends import Depends, inject

from extkit.diffkit.models.jet import Jet2
from extkit.diffkit.models.scalar_field import ScalarField
from extkit.diffkit.services.jet_service._dependencies import (
    validate_point_dimension,
    validate_point_is_regular,
)
from extkit.diffkit.services.jet_service._utils import evaluate_jet, evaluate_value


@inject(
    cast=False,
    extra_dependencies=[
        Depends(validate_point_dimension, cast=False),
        Depends(validate_point_is_regular, cast=False),
    ],
)
def _eval_jet2(field: ScalarField, x: np.ndarray, order: int = 2) -> Jet2:
    return evaluate_jet(field, x, order)


@inject(
    cast=False,
    extra_dependencies=[
        Depends(validate_point_dimension, cast=False),
        Depends(validate_point_is_regular, cast=False),
    ],
)
def _eval_value(field: ScalarField, x: np.ndarray):
    return evaluate_value(field, x)
