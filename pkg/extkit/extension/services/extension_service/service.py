from typing import List, Tuple

import numpy as np

from extkit.extension.models.extended_state import ExtendedState
from extkit.extension.models.extension import Extension
from extkit.extension.models.g_solution import GSolution
from extkit.extension.schemas.extension_schema import ExtensionParams
from extkit.poisson.models.hamiltonian_system import HamiltonianSystem

from . import _utils
from ._service import _build_extension, _extended_flow, _h_extended


def h_extended(
    system: HamiltonianSystem, params: ExtensionParams, state: ExtendedState
) -> float:
    return _h_extended(system=system, params=params, state=state)


def extended_flow(
    system: HamiltonianSystem, params: ExtensionParams, state: ExtendedState
) -> np.ndarray:
    """Time derivative of (u, p_u, x) under H, ordered like the state array."""
    return _extended_flow(system=system, params=params, state=state)


def build_extension(
    system: HamiltonianSystem, solution: GSolution, params: ExtensionParams
) -> Extension:
    return _build_extension(system=system, solution=solution, params=params)


def extended_intervals(
    params: ExtensionParams, base_intervals: List[Tuple[float, float]]
) -> List[Tuple[float, float]]:
    return _utils.extended_intervals(params, base_intervals)
