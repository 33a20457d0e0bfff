import logging
from typing import Tuple

import numpy as np
from fast_depends import Depends, inject

from extkit.diffkit.models.jet import Scalar
from extkit.extension.models.ext_deriv_value import ExtDerivValue
from extkit.extension.models.extended_state import ExtendedState
from extkit.extension.models.g_solution import GSolution
from extkit.extension.schemas.extension_schema import ExtensionParams
from extkit.extension.services.characteristic_service import _utils
from extkit.extension.services.characteristic_service._dependencies import (
    validate_base_point,
    validate_indices,
    validate_order,
    validate_regime,
    validate_solution_dimension,
    validate_state,
    validate_zero_omega,
)
from extkit.gamma.services.gamma_service._utils import gamma_values
from extkit.poisson.models.hamiltonian_system import HamiltonianSystem
from extkit.settings import settings
from extkit.shared.exceptions import PoleError

logger = logging.getLogger(__name__)


@inject(
    cast=False,
    extra_dependencies=[
        Depends(validate_solution_dimension, cast=False),
        Depends(validate_regime, cast=False),
        Depends(validate_base_point, cast=False),
    ],
)
def _seed_pair(
    system: HamiltonianSystem,
    solution: GSolution,
    params: ExtensionParams,
    x: np.ndarray,
) -> Tuple[ExtDerivValue, Scalar]:
    return _utils.seed_values(system, solution, x)


@inject(cast=False, extra_dependencies=[Depends(validate_order, cast=False)])
def _gn_recursive(n: int, pair: ExtDerivValue, lam: Scalar) -> ExtDerivValue:
    return _utils.gn_recursive_pair(n, pair, lam)


@inject(cast=False, extra_dependencies=[Depends(validate_order, cast=False)])
def _gn_closed(n: int, pair: ExtDerivValue, lam: Scalar) -> ExtDerivValue:
    return _utils.gn_closed_pair(n, pair, lam)


@inject(cast=False, extra_dependencies=[Depends(validate_indices, cast=False)])
def _pd_coeffs(
    m: int, n: int, r: int, p_u: float, gamma: float, lam: Scalar
) -> Tuple[Scalar, Scalar]:
    return _utils.pd_coefficients(m, n, r, p_u, gamma, lam)


@inject(
    cast=False,
    extra_dependencies=[
        Depends(validate_zero_omega, cast=False),
        Depends(validate_solution_dimension, cast=False),
        Depends(validate_regime, cast=False),
        Depends(validate_state, cast=False),
    ],
)
def _k_char(
    system: HamiltonianSystem,
    solution: GSolution,
    params: ExtensionParams,
    state: ExtendedState,
) -> Scalar:
    return _utils.integral_value(system, solution, params, state)


@inject(
    cast=False,
    extra_dependencies=[
        Depends(validate_solution_dimension, cast=False),
        Depends(validate_regime, cast=False),
        Depends(validate_state, cast=False),
    ],
)
def _kbar_char(
    system: HamiltonianSystem,
    solution: GSolution,
    params: ExtensionParams,
    state: ExtendedState,
) -> Scalar:
    pair, l_value = _utils.seed_values(system, solution, state.base)
    lam = params.c * l_value + params.c0
    gamma, _, _ = gamma_values(params.c, params.C, state.u, params.u_offset)
    if params.omega != 0 and abs(gamma) < settings.POLE_TOLERANCE:
        raise PoleError(f"gamma vanishes at u={state.u!r}")
    m, n = _utils.bar_indices(params)
    return _utils.characteristic_bar_value(
        pair, lam, state.p_u, gamma, m // 2, n, params.omega
    )


@inject(
    cast=False,
    extra_dependencies=[
        Depends(validate_solution_dimension, cast=False),
        Depends(validate_regime, cast=False),
        Depends(validate_state, cast=False),
    ],
)
def _characteristic_integral(
    system: HamiltonianSystem,
    solution: GSolution,
    params: ExtensionParams,
    state: ExtendedState,
) -> Scalar:
    if params.resolved_indices != (params.m, params.n):
        logger.debug(
            "Doubling indices (%s, %s) to %s for omega=%s",
            params.m,
            params.n,
            params.resolved_indices,
            params.omega,
        )
    return _utils.integral_value(system, solution, params, state)
