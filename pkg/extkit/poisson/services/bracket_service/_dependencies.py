import numpy as np

from extkit.diffkit.models.scalar_field import ScalarField
from extkit.poisson.models.hamiltonian_system import HamiltonianSystem
from extkit.poisson.models.poisson_structure import PoissonStructure
from extkit.shared.exceptions import DimensionMismatchError, SingularPointError


def _check_dimension(dim: int, x: np.ndarray):
    if x.shape[0] != dim:
        raise DimensionMismatchError(
            f"Point dimension {x.shape[0]} does not match system dimension {dim}"
        )


def validate_system_point(system: HamiltonianSystem, x: np.ndarray):
    _check_dimension(system.dim, x)
    if system.is_singular(x):
        raise SingularPointError("The point lies in the singular set of the system")


def validate_structure_point(structure: PoissonStructure, x: np.ndarray):
    _check_dimension(structure.dim, x)
    if structure.is_singular(x):
        raise SingularPointError("The point lies in the singular set of the structure")


def validate_field_f(structure: PoissonStructure, f: ScalarField, x: np.ndarray):
    _validate_field(structure.dim, f, x)


def validate_field_g(structure: PoissonStructure, g: ScalarField, x: np.ndarray):
    _validate_field(structure.dim, g, x)


def validate_field_h(structure: PoissonStructure, h: ScalarField, x: np.ndarray):
    _validate_field(structure.dim, h, x)


def validate_observable(system: HamiltonianSystem, f: ScalarField, x: np.ndarray):
    _validate_field(system.dim, f, x)


def _validate_field(dim: int, field: ScalarField, x: np.ndarray):
    if field.dim != dim:
        raise DimensionMismatchError(
            f"Field dimension {field.dim} does not match structure dimension {dim}"
        )
    if field.is_singular(x):
        raise SingularPointError("The point lies in the singular set of the field")
