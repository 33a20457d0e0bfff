import numpy as np
import pytest

from extkit.catalog.registry import ENTRIES
from extkit.diffkit.models.scalar_field import ScalarField
from extkit.extension.schemas.extension_schema import ExtensionParams
from extkit.extension.services.extension_service import service as extension_service
from extkit.shared.exceptions import (
    DimensionMismatchError,
    ServiceValidationError,
    SingularPointError,
)
from extkit.verify.schemas.sample_schema import SampleSpec
from extkit.verify.services.bracket_check_service import service
from extkit.verify.services.sampling_service import service as sampling_service


def _extension(pair, **params):
    system, solution = pair
    return extension_service.build_extension(
        system=system, solution=solution, params=ExtensionParams(**params)
    )


def _states(extension, entry_id, count, seed=5, margin=0.05):
    entry = ENTRIES[entry_id]
    spec = SampleSpec(
        intervals=extension_service.extended_intervals(
            extension.params, entry.intervals(entry.params_schema())
        ),
        count=count,
        seed=seed,
        margin=margin,
    )
    return list(sampling_service.sample_points(spec=spec, singular=extension.is_singular))


@pytest.fixture(scope="module")
def quartic1_extension(quartic1):
    return _extension(quartic1, c=1.0, c0=1.0, m=2, n=1)


def test_fd_bracket_ok__self_bracket_vanishes(quartic1_extension):
    for state in _states(quartic1_extension, "quartic1", 10):
        result = service.fd_bracket(
            structure=quartic1_extension.structure,
            f=quartic1_extension.hamiltonian,
            g=quartic1_extension.hamiltonian,
            state=state,
        )

        assert result.normalized <= 1e-12


def test_fd_bracket_ok__antisymmetric(quartic1_extension):
    u = ScalarField.coordinate(0, quartic1_extension.dim, name="u")
    state = _states(quartic1_extension, "quartic1", 1)[0]

    forward = service.fd_bracket(
        structure=quartic1_extension.structure,
        f=quartic1_extension.hamiltonian,
        g=u,
        state=state,
    )
    backward = service.fd_bracket(
        structure=quartic1_extension.structure,
        f=u,
        g=quartic1_extension.hamiltonian,
        state=state,
    )

    assert forward.value == pytest.approx(-backward.value, rel=1e-12)
    assert forward.scale == pytest.approx(backward.scale, rel=1e-12)


def test_fd_bracket_ok__hamiltonian_with_u(quartic1_extension):
    u = ScalarField.coordinate(0, quartic1_extension.dim, name="u")

    for state in _states(quartic1_extension, "quartic1", 5):
        result = service.fd_bracket(
            structure=quartic1_extension.structure,
            f=quartic1_extension.hamiltonian,
            g=u,
            state=state,
        )

        assert result.value == pytest.approx(-state[1], abs=1e-8)


def test_fd_bracket_ok__characteristic_integral_commutes(quartic1_extension):
    for state in _states(quartic1_extension, "quartic1", 20, seed=9):
        result = service.fd_bracket(
            structure=quartic1_extension.structure,
            f=quartic1_extension.hamiltonian,
            g=quartic1_extension.integral,
            state=state,
        )

        assert result.normalized <= 1e-5


def test_fd_bracket_failure__non_positive_step(quartic1_extension):
    state = _states(quartic1_extension, "quartic1", 1)[0]

    for h in (0.0, -1e-5):
        with pytest.raises(ServiceValidationError) as ctx:
            service.fd_bracket(
                structure=quartic1_extension.structure,
                f=quartic1_extension.hamiltonian,
                g=quartic1_extension.hamiltonian,
                state=state,
                h=h,
            )

        assert ctx.value.args[0] == "h must be positive"


def test_fd_bracket_failure__dimension(free_particle, euler_top):
    with pytest.raises(DimensionMismatchError) as ctx:
        service.fd_bracket(
            structure=free_particle.structure,
            f=free_particle.hamiltonian,
            g=euler_top.hamiltonian,
            state=[0.0, 1.0],
        )

    assert ctx.value.args[0] == "Field dimension 3 does not match structure dimension 2"

    with pytest.raises(DimensionMismatchError) as ctx:
        service.fd_bracket(
            structure=free_particle.structure,
            f=free_particle.hamiltonian,
            g=free_particle.hamiltonian,
            state=[0.0, 1.0, 2.0],
        )

    assert ctx.value.args[0] == "State dimension 3 does not match structure dimension 2"


def test_fd_bracket_failure__near_singular_set(vortex_opposite):
    system, solution = vortex_opposite

    with pytest.raises(SingularPointError) as ctx:
        service.fd_bracket(
            structure=system.structure,
            f=system.hamiltonian,
            g=solution.field,
            state=[0.3, 0.2, 0.1, 1e-6],
        )

    assert ctx.value.args[0] == "The state lies within 2h of a singular set"


def test_independence_rank_ok__dependent_fields(quartic1_extension):
    hamiltonian = quartic1_extension.hamiltonian

    rank = service.independence_rank(
        fields=[hamiltonian, 2 * hamiltonian, quartic1_extension.base_observables["L"]],
        structure=quartic1_extension.structure,
        states=_states(quartic1_extension, "quartic1", 10),
    )

    assert rank == 2


def test_independence_rank_ok__euler_top(euler_top):
    states = np.random.default_rng(1).uniform(-1.0, 1.0, size=(10, 3))

    rank = service.independence_rank(
        fields=[euler_top.hamiltonian, euler_top.observables["M"]],
        structure=euler_top.structure,
        states=states,
    )

    assert rank == 2


def test_independence_rank_ok__vortex_opposite_extension(vortex_opposite):
    extension = _extension(vortex_opposite, c=0.0, c0=0.5)

    rank = service.independence_rank(
        fields=[
            extension.hamiltonian,
            extension.base_observables["X1t"],
            extension.base_observables["Y2t"],
            extension.integral,
        ],
        structure=extension.structure,
        states=_states(extension, "vortex_opposite", 10, margin=0.1),
    )

    assert rank == 4


def test_independence_rank_failure__empty_arguments(euler_top):
    with pytest.raises(ServiceValidationError) as ctx:
        service.independence_rank(
            fields=[euler_top.hamiltonian], structure=euler_top.structure, states=[]
        )

    assert ctx.value.args[0] == "At least one state is required"

    with pytest.raises(ServiceValidationError) as ctx:
        service.independence_rank(
            fields=[], structure=euler_top.structure, states=[[1.0, 0.0, 0.0]]
        )

    assert ctx.value.args[0] == "At least one field is required"
