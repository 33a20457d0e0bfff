from typing import Any, Mapping, Sequence, Union

import numpy as np

from extkit.catalog.schemas.catalog_schema import SingleValuedness
from extkit.catalog.schemas.entry_schema import VORTEX_ALPHA, VortexParams
from extkit.diffkit.models.phase_point import as_phase_point
from extkit.poisson.models.hamiltonian_system import HamiltonianSystem

from ._service import (
    _from_tilde,
    _single_valuedness,
    _to_tilde,
    _vortex_general_hamiltonian,
)


def to_tilde(point: Sequence[float]) -> np.ndarray:
    return _to_tilde(point=as_phase_point(point))


def from_tilde(point: Sequence[float]) -> np.ndarray:
    return _from_tilde(point=as_phase_point(point))


def vortex_general_hamiltonian(
    k1: float, k2: float, alpha: float = VORTEX_ALPHA
) -> HamiltonianSystem:
    """Two vortices of intensities k1, k2 in the canonical (X1, X2, Y1, Y2)."""
    return _vortex_general_hamiltonian(k1=k1, k2=k2, alpha=alpha)


def single_valuedness(
    params: Union[VortexParams, Mapping[str, Any]], point: Sequence[float]
) -> SingleValuedness:
    """Whether the equal-intensity G is single valued on the level set of ``point``.

    It is when Q1 sqrt(2 c0) / (4 alpha k^3) is an integer.
    """
    if not isinstance(params, VortexParams):
        params = VortexParams.model_validate(params)
    return _single_valuedness(params=params, point=as_phase_point(point))
