from typing import Tuple

from fast_depends import Depends, inject

from extkit.gamma.schemas.gamma_schema import GammaParams
from extkit.gamma.services.gamma_service._dependencies import (
    validate_finite_argument,
    validate_finite_u,
)
from extkit.gamma.services.gamma_service._utils import gamma_values, tagged_trig


@inject(
    cast=False,
    extra_dependencies=[Depends(validate_finite_argument, cast=False)],
)
def _tagged_trig(kappa: float, x: float) -> Tuple[float, float, float]:
    return tuple(float(value) for value in tagged_trig(kappa, x))


@inject(
    cast=False,
    extra_dependencies=[Depends(validate_finite_u, cast=False)],
)
def _gamma_eval(params: GammaParams, u: float) -> Tuple[float, float, float]:
    values = gamma_values(params.c, params.C, u, params.u_offset)
    return tuple(float(value) for value in values)
