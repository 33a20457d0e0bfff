from typing import List, Tuple

from extkit.catalog.schemas.entry_schema import LotkaVolterraParams
from extkit.diffkit.models.jet import exp, power
from extkit.diffkit.models.scalar_field import ScalarField
from extkit.poisson.models.hamiltonian_system import HamiltonianSystem
from extkit.poisson.models.poisson_structure import PoissonStructure

COORDINATES = ("x", "y")
NOTES = "no-extension: the known G involves the multi-valued Lambert W function"


def _positive_quadrant(x, margin: float = 0.0) -> bool:
    return x[0] <= margin or x[1] <= margin


def build(params: LotkaVolterraParams) -> Tuple[HamiltonianSystem, None]:
    """Prey-predator dynamics x' = ax - bxy, y' = dxy - gy as a Poisson system."""
    a, b, d, g = params.a, params.b, params.d, params.g

    def _bivector(x):
        return -power(x[0], 1 + g) * power(x[1], 1 + a) * exp(-b * x[1] - d * x[0])

    def _hamiltonian(x):
        return power(x[0], -g) * power(x[1], -a) * exp(d * x[0] + b * x[1])

    structure = PoissonStructure.custom(
        dim=2,
        entries={
            (0, 1): ScalarField(
                dim=2, rule=_bivector, singular=_positive_quadrant, name="A"
            )
        },
        name="lotka_volterra",
    )
    system = HamiltonianSystem(
        structure=structure,
        hamiltonian=ScalarField(
            dim=2, rule=_hamiltonian, singular=_positive_quadrant, name="L"
        ),
        observables={
            "x": ScalarField.coordinate(0, 2, name="x"),
            "y": ScalarField.coordinate(1, 2, name="y"),
        },
        name="lotka_volterra",
    )
    return system, None


def rates(params: LotkaVolterraParams, x) -> Tuple[float, float]:
    """The prey-predator right-hand side the Poisson form reproduces."""
    return (
        params.a * x[0] - params.b * x[0] * x[1],
        params.d * x[0] * x[1] - params.g * x[1],
    )


def intervals(params: LotkaVolterraParams) -> List[Tuple[float, float]]:
    return [(0.5, 2.0), (0.5, 2.0)]
