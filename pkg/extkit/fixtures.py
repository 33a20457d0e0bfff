import pytest

from extkit.catalog.services.catalog_service import service as catalog_service
from extkit.diffkit.models.scalar_field import ScalarField
from extkit.poisson.models.hamiltonian_system import HamiltonianSystem
from extkit.poisson.models.poisson_structure import PoissonStructure


def _with_solution(entry_id: str, params: dict | None = None):
    system, solutions = catalog_service.instantiate(entry_id=entry_id, params=params)
    return system, solutions[0]


@pytest.fixture(scope="session")
def harmonic_oscillator():
    return _with_solution("harmonic_oscillator", {"omega": 2.0})


@pytest.fixture(scope="session")
def unit_oscillator():
    return _with_solution("harmonic_oscillator", {"omega": 1.0})


@pytest.fixture(scope="session")
def free_particle():
    return HamiltonianSystem(
        structure=PoissonStructure.canonical(1),
        hamiltonian=ScalarField(dim=2, rule=lambda x: 0.5 * x[1] * x[1], name="L"),
        name="free_particle",
    )


@pytest.fixture(scope="session")
def constant_system():
    return HamiltonianSystem(
        structure=PoissonStructure.canonical(1),
        hamiltonian=ScalarField.constant(3.0, 2, name="L"),
        name="constant",
    )


@pytest.fixture(scope="session")
def quartic1():
    return _with_solution("quartic1")


@pytest.fixture(scope="session")
def vortex_equal():
    return _with_solution("vortex_equal")


@pytest.fixture(scope="session")
def vortex_opposite():
    return _with_solution("vortex_opposite")


@pytest.fixture(scope="session")
def euler_top():
    system, _ = catalog_service.instantiate(entry_id="euler_top")
    return system


@pytest.fixture(scope="session")
def lotka_volterra():
    system, _ = catalog_service.instantiate(entry_id="lotka_volterra")
    return system
