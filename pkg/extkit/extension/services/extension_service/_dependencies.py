from extkit.extension.models.extended_state import ExtendedState
from extkit.poisson.models.hamiltonian_system import HamiltonianSystem
from extkit.shared.exceptions import DimensionMismatchError, SingularPointError


def validate_state(system: HamiltonianSystem, state: ExtendedState):
    if state.base.shape[0] != system.dim:
        raise DimensionMismatchError(
            f"Base point dimension {state.base.shape[0]} does not match "
            f"system dimension {system.dim}"
        )
    if system.is_singular(state.base):
        raise SingularPointError("The base point lies in the singular set of L")
