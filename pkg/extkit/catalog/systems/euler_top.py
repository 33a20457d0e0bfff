from typing import List, Tuple

from extkit.catalog.schemas.entry_schema import EulerTopParams
from extkit.diffkit.models.scalar_field import ScalarField
from extkit.poisson.models.hamiltonian_system import HamiltonianSystem
from extkit.poisson.models.poisson_structure import PoissonStructure

COORDINATES = ("m1", "m2", "m3")
NOTES = "no-extension: the Kuru-Negro G involves a multi-valued elliptic integral"


def rigid_body_structure() -> PoissonStructure:
    """The Lie-Poisson bivector of so(3) on the body angular momentum."""
    return PoissonStructure.custom(
        dim=3,
        entries={
            (0, 1): ScalarField(dim=3, rule=lambda m: -m[2]),
            (0, 2): ScalarField(dim=3, rule=lambda m: m[1]),
            (1, 2): ScalarField(dim=3, rule=lambda m: -m[0]),
        },
        name="euler_top",
    )


def casimir() -> ScalarField:
    return ScalarField(
        dim=3, rule=lambda m: m[0] * m[0] + m[1] * m[1] + m[2] * m[2], name="M"
    )


def energy(params: EulerTopParams) -> ScalarField:
    I1, I2, I3 = params.I1, params.I2, params.I3
    return ScalarField(
        dim=3,
        rule=lambda m: 0.5 * (m[0] * m[0] / I1 + m[1] * m[1] / I2 + m[2] * m[2] / I3),
        name="L",
    )


def build(params: EulerTopParams) -> Tuple[HamiltonianSystem, None]:
    system = HamiltonianSystem(
        structure=rigid_body_structure(),
        hamiltonian=energy(params),
        observables={"M": casimir()},
        name="euler_top",
    )
    return system, None


def intervals(params: EulerTopParams) -> List[Tuple[float, float]]:
    return [(-1.0, 1.0)] * 3
