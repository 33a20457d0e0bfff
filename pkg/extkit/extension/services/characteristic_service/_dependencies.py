import numpy as np

from extkit.extension.models.extended_state import ExtendedState
from extkit.extension.models.g_solution import GSolution
from extkit.extension.schemas.extension_schema import ExtensionParams
from extkit.poisson.models.hamiltonian_system import HamiltonianSystem
from extkit.shared.exceptions import (
    DimensionMismatchError,
    ServiceValidationError,
    SingularPointError,
)


def validate_order(n: int):
    if n < 1:
        raise ServiceValidationError("n must be a positive integer")


def validate_indices(m: int, n: int, r: int):
    if m < 1 or n < 1:
        raise ServiceValidationError("m and n must be positive integers")
    if r < 0:
        raise ServiceValidationError("r must be a non-negative integer")
    if r > m:
        raise ServiceValidationError(f"r={r} cannot exceed m={m}")


def validate_regime(solution: GSolution, params: ExtensionParams):
    if not solution.holds_for(params.c, params.c0):
        raise ServiceValidationError(
            f"The G solution holds for (c, c0) = ({solution.c}, {solution.c0}), "
            f"not ({params.c}, {params.c0})"
        )


def validate_solution_dimension(system: HamiltonianSystem, solution: GSolution):
    if solution.dim != system.dim:
        raise DimensionMismatchError(
            f"G dimension {solution.dim} does not match system dimension {system.dim}"
        )


def validate_base_point(system: HamiltonianSystem, solution: GSolution, x: np.ndarray):
    if x.shape[0] != system.dim:
        raise DimensionMismatchError(
            f"Point dimension {x.shape[0]} does not match system dimension {system.dim}"
        )
    if system.is_singular(x) or solution.is_singular(x):
        raise SingularPointError("The point lies in the singular set of L or G")


def validate_state(
    system: HamiltonianSystem, solution: GSolution, state: ExtendedState
):
    validate_base_point(system, solution, state.base)


def validate_zero_omega(params: ExtensionParams):
    if params.omega != 0:
        raise ServiceValidationError("k_char requires omega = 0, use kbar_char instead")
