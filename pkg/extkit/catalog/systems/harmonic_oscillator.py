from typing import List, Tuple

from extkit.catalog.schemas.entry_schema import HarmonicOscillatorParams
from extkit.diffkit.models.scalar_field import ScalarField
from extkit.extension.models.g_solution import GSolution
from extkit.poisson.models.hamiltonian_system import HamiltonianSystem
from extkit.poisson.models.poisson_structure import PoissonStructure

COORDINATES = ("q", "p")


def build(params: HarmonicOscillatorParams) -> Tuple[HamiltonianSystem, GSolution]:
    omega2 = params.omega**2
    hamiltonian = ScalarField(
        dim=2, rule=lambda x: 0.5 * (x[1] * x[1] + omega2 * x[0] * x[0]), name="L"
    )
    system = HamiltonianSystem(
        structure=PoissonStructure.canonical(1),
        hamiltonian=hamiltonian,
        observables={"q": ScalarField.coordinate(0, 2, name="q")},
        name="harmonic_oscillator",
    )
    solution = GSolution(
        field=ScalarField.coordinate(0, 2, name="G"),
        c=0.0,
        c0=omega2 / 2,
        constraints="c = 0, c0 = omega^2 / 2",
        name="harmonic_oscillator",
    )
    return system, solution


def intervals(params: HarmonicOscillatorParams) -> List[Tuple[float, float]]:
    return [(-2.0, 2.0), (-2.0, 2.0)]
