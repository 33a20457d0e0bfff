import logging

import numpy as np
from fast_depends import Depends, inject

from extkit.diffkit.models.scalar_field import embed
from extkit.diffkit.services.jet_service._utils import evaluate_value
from extkit.extension.models.extended_state import ExtendedState
from extkit.extension.models.extension import Extension
from extkit.extension.models.g_solution import GSolution
from extkit.extension.schemas.extension_schema import ExtensionParams
from extkit.extension.services.characteristic_service._dependencies import (
    validate_regime,
    validate_solution_dimension,
)
from extkit.extension.services.extension_service import _utils
from extkit.extension.services.extension_service._dependencies import validate_state
from extkit.poisson.models.hamiltonian_system import HamiltonianSystem
from extkit.poisson.services.structure_service._utils import (
    EXTENSION_OFFSET,
    extended_structure,
)

logger = logging.getLogger(__name__)


@inject(cast=False, extra_dependencies=[Depends(validate_state, cast=False)])
def _h_extended(
    system: HamiltonianSystem, params: ExtensionParams, state: ExtendedState
) -> float:
    l_value = evaluate_value(system.hamiltonian, state.base)
    return float(_utils.hamiltonian_value(params, l_value, state.u, state.p_u))


@inject(cast=False, extra_dependencies=[Depends(validate_state, cast=False)])
def _extended_flow(
    system: HamiltonianSystem, params: ExtensionParams, state: ExtendedState
) -> np.ndarray:
    return _utils.extended_rate(system, params, state.as_array())


@inject(
    cast=False,
    extra_dependencies=[
        Depends(validate_solution_dimension, cast=False),
        Depends(validate_regime, cast=False),
    ],
)
def _build_extension(
    system: HamiltonianSystem, solution: GSolution, params: ExtensionParams
) -> Extension:
    dim = system.dim + EXTENSION_OFFSET
    base_observables = {
        "L": embed(system.hamiltonian, dim, EXTENSION_OFFSET).named("L")
    }
    for name, observable in system.observables.items():
        base_observables[name] = embed(observable, dim, EXTENSION_OFFSET).named(name)

    if solution.verified is False:
        logger.warning(
            "Building an extension of %s on a G solution that failed verification",
            system.name,
        )
    indices = params.resolved_indices
    logger.info(
        "Extending %s with k=%s, omega=%s, indices %s",
        system.name,
        params.k,
        params.omega,
        indices,
    )
    return Extension(
        system=system,
        solution=solution,
        params=params,
        structure=extended_structure(system.structure),
        hamiltonian=_utils.hamiltonian_field(system, params),
        integral=_utils.integral_field(system, solution, params),
        rate=lambda y: _utils.extended_rate(system, params, np.asarray(y, dtype=float)),
        indices=indices,
        base_observables=base_observables,
    )
