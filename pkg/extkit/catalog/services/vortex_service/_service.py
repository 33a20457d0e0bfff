import math

import numpy as np
from fast_depends import Depends, inject

from extkit.catalog.schemas.catalog_schema import SingleValuedness
from extkit.catalog.schemas.entry_schema import VortexParams
from extkit.catalog.services.vortex_service import _utils
from extkit.catalog.services.vortex_service._dependencies import (
    validate_intensities,
    validate_level_set,
    validate_vortex_point,
)
from extkit.catalog.systems.vortex import equal_exponent, equal_q, general_hamiltonian
from extkit.poisson.models.hamiltonian_system import HamiltonianSystem
from extkit.poisson.models.poisson_structure import PoissonStructure
from extkit.settings import settings


@inject(cast=False, extra_dependencies=[Depends(validate_vortex_point, cast=False)])
def _to_tilde(point: np.ndarray) -> np.ndarray:
    return _utils.to_tilde(point)


@inject(cast=False, extra_dependencies=[Depends(validate_vortex_point, cast=False)])
def _from_tilde(point: np.ndarray) -> np.ndarray:
    return _utils.from_tilde(point)


@inject(cast=False, extra_dependencies=[Depends(validate_intensities, cast=False)])
def _vortex_general_hamiltonian(
    k1: float, k2: float, alpha: float
) -> HamiltonianSystem:
    return HamiltonianSystem(
        structure=PoissonStructure.canonical(2),
        hamiltonian=general_hamiltonian(k1, k2, alpha),
        name="two_vortices",
    )


@inject(
    cast=False,
    extra_dependencies=[
        Depends(validate_vortex_point, cast=False),
        Depends(validate_level_set, cast=False),
    ],
)
def _single_valuedness(params: VortexParams, point: np.ndarray) -> SingleValuedness:
    exponent = equal_exponent(params, equal_q(params, point[0], point[2]))
    nearest = round(exponent)
    return SingleValuedness(
        exponent=exponent,
        nearest_integer=nearest,
        single_valued=math.fabs(exponent - nearest)
        <= settings.SINGLE_VALUEDNESS_TOLERANCE,
    )
