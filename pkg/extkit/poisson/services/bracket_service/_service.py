import numpy as np
from fast_depends import Depends, inject

from extkit.diffkit.models.scalar_field import ScalarField
from extkit.poisson.models.hamiltonian_system import HamiltonianSystem
from extkit.poisson.models.poisson_structure import PoissonStructure
from extkit.poisson.services.bracket_service import _utils
from extkit.poisson.services.bracket_service._dependencies import (
    validate_field_f,
    validate_field_g,
    validate_field_h,
    validate_observable,
    validate_structure_point,
    validate_system_point,
)


@inject(
    cast=False,
    extra_dependencies=[Depends(validate_system_point, cast=False)],
)
def _ham_vector_field(system: HamiltonianSystem, x: np.ndarray) -> np.ndarray:
    return _utils.vector_field(system, x)


@inject(
    cast=False,
    extra_dependencies=[
        Depends(validate_structure_point, cast=False),
        Depends(validate_field_f, cast=False),
        Depends(validate_field_g, cast=False),
    ],
)
def _bracket(
    structure: PoissonStructure, f: ScalarField, g: ScalarField, x: np.ndarray
):
    return _utils.bracket_value(structure, f, g, x)


@inject(
    cast=False,
    extra_dependencies=[
        Depends(validate_system_point, cast=False),
        Depends(validate_observable, cast=False),
    ],
)
def _apply_xl(system: HamiltonianSystem, f: ScalarField, x: np.ndarray):
    return _utils.bracket_value(system.structure, f, system.hamiltonian, x)


@inject(
    cast=False,
    extra_dependencies=[
        Depends(validate_system_point, cast=False),
        Depends(validate_observable, cast=False),
    ],
)
def _apply_xl2(system: HamiltonianSystem, f: ScalarField, x: np.ndarray):
    return _utils.apply_xl2(system, f, x)


@inject(
    cast=False,
    extra_dependencies=[
        Depends(validate_structure_point, cast=False),
        Depends(validate_field_f, cast=False),
        Depends(validate_field_g, cast=False),
    ],
)
def _bracket_gradient(
    structure: PoissonStructure, f: ScalarField, g: ScalarField, x: np.ndarray
) -> np.ndarray:
    return _utils.bracket_gradient(structure, f, g, x)


@inject(
    cast=False,
    extra_dependencies=[
        Depends(validate_structure_point, cast=False),
        Depends(validate_field_f, cast=False),
        Depends(validate_field_g, cast=False),
        Depends(validate_field_h, cast=False),
    ],
)
def _jacobi_residual(
    structure: PoissonStructure,
    f: ScalarField,
    g: ScalarField,
    h: ScalarField,
    x: np.ndarray,
):
    return _utils.jacobi_residual(structure, f, g, h, x)
