from typing import Sequence

import numpy as np

from extkit.diffkit.models.phase_point import as_phase_point
from extkit.diffkit.models.scalar_field import ScalarField
from extkit.poisson.models.hamiltonian_system import HamiltonianSystem
from extkit.poisson.models.poisson_structure import PoissonStructure

from ._service import (
    _apply_xl,
    _apply_xl2,
    _bracket,
    _bracket_gradient,
    _ham_vector_field,
    _jacobi_residual,
)


def ham_vector_field(system: HamiltonianSystem, x: Sequence[float]) -> np.ndarray:
    return _ham_vector_field(system=system, x=as_phase_point(x))


def bracket(
    structure: PoissonStructure,
    f: ScalarField,
    g: ScalarField,
    x: Sequence[float],
):
    return _bracket(structure=structure, f=f, g=g, x=as_phase_point(x))


def apply_xl(system: HamiltonianSystem, f: ScalarField, x: Sequence[float]):
    """X_L f = grad f . (pi grad L), so that X_L q = dL/dp for canonical pairs."""
    return _apply_xl(system=system, f=f, x=as_phase_point(x))


def apply_xl2(system: HamiltonianSystem, f: ScalarField, x: Sequence[float]):
    return _apply_xl2(system=system, f=f, x=as_phase_point(x))


def bracket_gradient(
    structure: PoissonStructure,
    f: ScalarField,
    g: ScalarField,
    x: Sequence[float],
) -> np.ndarray:
    return _bracket_gradient(structure=structure, f=f, g=g, x=as_phase_point(x))


def jacobi_residual(
    structure: PoissonStructure,
    f: ScalarField,
    g: ScalarField,
    h: ScalarField,
    x: Sequence[float],
):
    return _jacobi_residual(structure=structure, f=f, g=g, h=h, x=as_phase_point(x))
