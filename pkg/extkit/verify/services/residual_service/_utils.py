import enum
from typing import Callable, List, Optional

import numpy as np

from extkit.diffkit.models.scalar_field import ScalarField
from extkit.diffkit.services.jet_service._utils import evaluate_value
from extkit.poisson.models.hamiltonian_system import HamiltonianSystem
from extkit.poisson.services.bracket_service._utils import (
    apply_xl2,
    bracket_value,
    vector_field,
)
from extkit.shared.exceptions import NonFiniteResultError, ServiceValidationError
from extkit.verify.models.butcher_tableau import RK4
from extkit.verify.services.integration_service._utils import rk_step

DomainPredicate = Callable[[np.ndarray], bool]

# failures of a single point evaluation, counted instead of raised
POINT_ERRORS = (
    ServiceValidationError,
    NonFiniteResultError,
    ArithmeticError,
    FloatingPointError,
    ValueError,
)


class KnMethod(enum.Enum):
    jet = "jet"
    flow = "flow"


def relative_residual(a, b, epsilon: float) -> float:
    """|a + b| / (|a| + |b| + epsilon)."""
    return float(abs(a + b) / (abs(a) + abs(b) + epsilon))


def pde_point_residual(
    system: HamiltonianSystem,
    field: ScalarField,
    c: float,
    c0: float,
    x: np.ndarray,
    epsilon: float,
) -> float:
    """Residual of X_L^2 G + 2 (cL + c0) G at x."""
    g = evaluate_value(field, x)
    l_value = evaluate_value(system.hamiltonian, x)
    second = apply_xl2(system, field, x)
    return relative_residual(second, 2.0 * (c * l_value + c0) * g, epsilon)


def flow_derivative(
    system: HamiltonianSystem, field: ScalarField, x: np.ndarray, h: float
):
    """X_L G from G at one RK4 step forward and backward along the flow of L."""

    def rate(y):
        return vector_field(system, y)

    forward, _ = rk_step(RK4, rate, x, h)
    backward, _ = rk_step(RK4, rate, x, -h)
    return (evaluate_value(field, forward) - evaluate_value(field, backward)) / (
        2.0 * h
    )


def kn_point_residual(
    system: HamiltonianSystem,
    field: ScalarField,
    c: float,
    c0: float,
    sign: int,
    x: np.ndarray,
    method: KnMethod,
    h: float,
    epsilon: float,
) -> float:
    """Residual of X_L G = sign sqrt(-2 (cL + c0)) G at x, principal root."""
    l_value = evaluate_value(system.hamiltonian, x)
    root = np.sqrt(complex(-2.0 * (c * l_value + c0)))
    g = evaluate_value(field, x)
    if method == KnMethod.jet:
        derivative = bracket_value(system.structure, field, system.hamiltonian, x)
    else:
        derivative = flow_derivative(system, field, x, h)
    return relative_residual(derivative, -sign * root * g, epsilon)


def summarize(
    points: List[np.ndarray], residuals: List[float]
) -> dict:
    worst = int(np.argmax(residuals))
    return {
        "max_residual": float(residuals[worst]),
        "mean_residual": float(np.mean(residuals)),
        "count": len(residuals),
        "worst_point": [float(v) for v in points[worst]],
        "residuals": [float(r) for r in residuals],
    }


def in_domain(domain: Optional[DomainPredicate], x: np.ndarray) -> bool:
    return domain is None or bool(domain(x))
