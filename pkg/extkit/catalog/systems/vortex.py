"""Two point vortices in the canonical coordinates (X1t, X2t, Y1t, Y2t).

X1t = (X1 - X2) / 2, X2t = (X1 + X2) / 2, Y1t = Y1 - Y2, Y2t = Y1 + Y2 with
X_i = x_i and Y_i = k_i y_i.
"""

import math
from typing import List, Tuple

import numpy as np

from extkit.catalog.schemas.entry_schema import VortexParams
from extkit.diffkit.models.jet import cos, exp, log, sin, sqrt
from extkit.diffkit.models.scalar_field import Codomain, ScalarField
from extkit.extension.models.g_solution import GlobalFlag, GSolution
from extkit.poisson.models.hamiltonian_system import HamiltonianSystem
from extkit.poisson.models.poisson_structure import PoissonStructure

COORDINATES = ("X1t", "X2t", "Y1t", "Y2t")
COLUMNS = ("X1t", "Y1t", "X2t", "Y2t")
EQUAL_MARGIN = 0.05
OPPOSITE_MARGIN = 0.1
INTEGER_TOLERANCE = 1e-9


def _coordinate_observables(*names: str):
    return {
        name: ScalarField.coordinate(COORDINATES.index(name), 4, name=name)
        for name in names
    }


def equal_q(params: VortexParams, x1t, y1t):
    """Q1 = k^2 exp(-L / (alpha k^2)) = 4 k^2 X1t^2 + Y1t^2."""
    return 4 * params.k**2 * x1t * x1t + y1t * y1t


def equal_exponent(params: VortexParams, q) -> float:
    return q * math.sqrt(2 * params.c0) / (4 * params.alpha * params.k**3)


def equal_singular(params: VortexParams):
    """Q1 = 0, and the branch cut of the power when its exponent is not an integer."""

    def _predicate(x, margin: float = 0.0) -> bool:
        tolerance = max(margin, 1e-12)
        x1t, y1t = x[0], x[2]
        q = equal_q(params, x1t, y1t)
        if q <= tolerance:
            return True
        if abs(x1t) > tolerance or y1t >= 0:
            return False
        exponent = equal_exponent(params, q)
        return abs(exponent - round(exponent)) > INTEGER_TOLERANCE

    return _predicate


def build_equal(params: VortexParams) -> Tuple[HamiltonianSystem, GSolution]:
    """k1 = k2 = k; G is a power of a unit complex number with an L-dependent exponent."""
    k, alpha = params.k, params.alpha
    F1, F2 = params.F1.build(), params.F2.build()
    root = math.sqrt(2 * params.c0)

    def _hamiltonian(x):
        x1t, y1t = x[0], x[2]
        return -alpha * k * k * log(4 * x1t * x1t + y1t * y1t / (k * k))

    def _g(x):
        x1t, y1t = x[0], x[2]
        q = equal_q(params, x1t, y1t)
        exponent = q * root / (4 * alpha * k**3)
        phase = log((y1t + 2j * k * x1t) / sqrt(q))
        l_value = _hamiltonian(x)
        return F1(l_value) * exp(exponent * phase) + F2(l_value) * exp(
            -exponent * phase
        )

    singular = equal_singular(params)
    system = HamiltonianSystem(
        structure=PoissonStructure.canonical(2),
        hamiltonian=ScalarField(dim=4, rule=_hamiltonian, singular=singular, name="L"),
        observables=_coordinate_observables("X2t", "Y2t"),
        name="vortex_equal",
    )
    solution = GSolution(
        field=ScalarField(
            dim=4, rule=_g, codomain=Codomain.complex, singular=singular, name="G"
        ),
        c=0.0,
        c0=params.c0,
        constraints="c = 0, c0 > 0, single-valued for an integer exponent",
        global_flag=GlobalFlag.conditionally_single_valued,
        name="vortex_equal",
    )
    return system, solution


def opposite_singular(params: VortexParams):
    def _predicate(x, margin: float = 0.0) -> bool:
        return abs(x[3]) <= max(margin, 1e-12)

    return _predicate


def build_opposite(params: VortexParams) -> Tuple[HamiltonianSystem, GSolution]:
    """k2 = -k1 = -k; G is trigonometric in X2t / Y2t, globally defined."""
    k, alpha = params.k, params.alpha
    F1, F2 = params.F1.build(), params.F2.build()
    root = math.sqrt(2 * params.c0)

    def _hamiltonian(x):
        x1t, y2t = x[0], x[3]
        return alpha * k * k * log(4 * x1t * x1t + y2t * y2t / (k * k))

    def _g(x):
        x1t, x2t, y2t = x[0], x[1], x[3]
        q = 4 * k * k * x1t * x1t + y2t * y2t
        angle = root * q * x2t / (2 * alpha * k * k * y2t)
        l_value = _hamiltonian(x)
        return F1(l_value) * sin(angle) + F2(l_value) * cos(angle)

    singular = opposite_singular(params)
    complex_output = not (params.F1.is_real and params.F2.is_real)
    system = HamiltonianSystem(
        structure=PoissonStructure.canonical(2),
        hamiltonian=ScalarField(dim=4, rule=_hamiltonian, singular=singular, name="L"),
        observables=_coordinate_observables("X1t", "Y2t"),
        name="vortex_opposite",
    )
    solution = GSolution(
        field=ScalarField(
            dim=4,
            rule=_g,
            codomain=Codomain.complex if complex_output else Codomain.real,
            singular=singular,
            name="G",
        ),
        c=0.0,
        c0=params.c0,
        constraints="c = 0, c0 > 0, Y2t != 0",
        global_flag=GlobalFlag.globally_defined,
        name="vortex_opposite",
    )
    return system, solution


def general_hamiltonian(k1: float, k2: float, alpha: float) -> ScalarField:
    """L on (X1, X2, Y1, Y2) for arbitrary intensities."""

    def _rule(x):
        X1, X2, Y1, Y2 = x
        dx = X1 - X2
        dy = Y1 / k1 - Y2 / k2
        return -alpha * k1 * k2 * log(dx * dx + dy * dy)

    def _singular(x, margin: float = 0.0) -> bool:
        X1, X2, Y1, Y2 = x
        return (X1 - X2) ** 2 + (Y1 / k1 - Y2 / k2) ** 2 <= max(margin, 1e-12)

    return ScalarField(dim=4, rule=_rule, singular=_singular, name="L")


TILDE = np.array(
    [
        [0.5, -0.5, 0.0, 0.0],
        [0.5, 0.5, 0.0, 0.0],
        [0.0, 0.0, 1.0, -1.0],
        [0.0, 0.0, 1.0, 1.0],
    ]
)


def intervals(params: VortexParams) -> List[Tuple[float, float]]:
    return [(-1.0, 1.0)] * 4
