import math

from extkit.diffkit.models.scalar_field import ScalarField
from extkit.extension.models.g_solution import GSolution
from extkit.poisson.models.hamiltonian_system import HamiltonianSystem
from extkit.shared.exceptions import DimensionMismatchError, ServiceValidationError
from extkit.verify.schemas.sample_schema import SampleSpec


def validate_solution_regime(solution: GSolution, c: float, c0: float):
    if not solution.holds_for(c, c0):
        raise ServiceValidationError(
            f"The G solution holds for (c, c0) = ({solution.c}, {solution.c0}), "
            f"not ({c}, {c0})"
        )


def validate_solution_dimension(system: HamiltonianSystem, solution: GSolution):
    validate_field_dimension(system, solution.field)


def validate_field_dimension(system: HamiltonianSystem, field: ScalarField):
    if field.dim != system.dim:
        raise DimensionMismatchError(
            f"G dimension {field.dim} does not match system dimension {system.dim}"
        )


def validate_spec_dimension(system: HamiltonianSystem, spec: SampleSpec):
    if spec.dim != system.dim:
        raise DimensionMismatchError(
            f"The sample spec has {spec.dim} intervals, "
            f"the system has dimension {system.dim}"
        )


def validate_c0_scale(c0_scale: float):
    if not math.isfinite(c0_scale):
        raise ServiceValidationError("The c0 scale must be finite")


def validate_sign(sign: int):
    if sign not in (1, -1):
        raise ServiceValidationError("The sign must be +1 or -1")
