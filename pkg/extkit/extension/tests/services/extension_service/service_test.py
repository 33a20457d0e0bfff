import math

import numpy as np
import pytest

from extkit.catalog.registry import ENTRIES
from extkit.catalog.services.catalog_service import service as catalog_service
from extkit.extension.models.extended_state import ExtendedState
from extkit.extension.services.extension_service import service
from extkit.extension.tests.factories import ExtensionParamsFactory
from extkit.poisson.models.hamiltonian_system import HamiltonianSystem
from extkit.poisson.services.bracket_service.service import ham_vector_field
from extkit.shared.exceptions import (
    DimensionMismatchError,
    PoleError,
    ServiceValidationError,
)
from extkit.verify.schemas.sample_schema import SampleSpec
from extkit.verify.services.bracket_check_service import service as bracket_check_service
from extkit.verify.services.integration_service import service as integration_service
from extkit.verify.services.sampling_service import service as sampling_service

QUARTIC1_STATE = [math.pi / 2, 0.3, 0.5, 0.4]
VORTEX_STATE = [0.8, 0.3, 0.3, 0.2, -0.4, 0.6]


def _extension(pair, **params):
    system, solution = pair
    return service.build_extension(
        system=system, solution=solution, params=ExtensionParamsFactory(**params)
    )


def _report(extension, state, t_final=10.0, dt=1e-3, every=10):
    trajectory = integration_service.integrate(
        flow=extension.flow,
        state0=state,
        t_final=t_final,
        method="rk4",
        dt_or_tol=dt,
        singular=extension.is_singular,
    )
    return integration_service.conservation_report(
        trajectory=trajectory, observables=extension.observables(), every=every
    )


def _states(extension, entry_id, count, seed=17, margin=0.05):
    entry = ENTRIES[entry_id]
    spec = SampleSpec(
        intervals=service.extended_intervals(
            extension.params, entry.intervals(entry.params_schema())
        ),
        count=count,
        seed=seed,
        margin=margin,
    )
    return list(sampling_service.sample_points(spec=spec, singular=extension.is_singular))


def test_h_extended_ok(constant_system, free_particle, subtests):
    with subtests.test(msg="all terms"):
        result = service.h_extended(
            system=constant_system,
            params=ExtensionParamsFactory(c=0.0, C=1.0, c0=0.5, m=2),
            state=ExtendedState(u=2.0, p_u=1.0, base=[1.0, 2.0]),
        )

        assert result == pytest.approx(20.5)

    with subtests.test(msg="only the gamma potential"):
        result = service.h_extended(
            system=free_particle,
            params=ExtensionParamsFactory(c=0.0, C=1.0, c0=0.5, m=2),
            state=ExtendedState(u=2.0, p_u=0.0, base=[0.3, 0.0]),
        )

        assert result == pytest.approx(8.0)


def test_h_extended_failure__gamma_zero(free_particle):
    with pytest.raises(PoleError) as ctx:
        service.h_extended(
            system=free_particle,
            params=ExtensionParamsFactory(c=0.0, c0=0.5, omega=0.5),
            state=ExtendedState(u=0.0, p_u=1.0, base=[0.3, 0.1]),
        )

    assert ctx.value.args[0] == "gamma vanishes at u=0.0"


def test_h_extended_failure__dimension(free_particle):
    with pytest.raises(DimensionMismatchError) as ctx:
        service.h_extended(
            system=free_particle,
            params=ExtensionParamsFactory(),
            state=ExtendedState(u=1.0, p_u=1.0, base=[0.3, 0.1, 0.2]),
        )

    assert ctx.value.args[0] == "Base point dimension 3 does not match system dimension 2"


def test_extended_flow_ok__linear_gamma(free_particle):
    state = ExtendedState(u=0.8, p_u=0.3, base=[0.2, -0.7])

    rate = service.extended_flow(
        system=free_particle,
        params=ExtensionParamsFactory(c=0.0, C=1.5, c0=0.5),
        state=state,
    )

    assert rate[0] == 0.3
    assert rate[1] == pytest.approx(-2 * 0.5 * 1.5**2 * 0.8)
    assert np.allclose(rate[2:], 1.5 * ham_vector_field(free_particle, state.base))


def test_extended_flow_ok__matches_vector_field_of_h(quartic1, subtests):
    for omega in (0.0, 0.1):
        with subtests.test(msg=f"omega={omega}"):
            extension = _extension(quartic1, c=1.0, c0=1.0, m=2, omega=omega)
            extended_system = HamiltonianSystem(
                structure=extension.structure, hamiltonian=extension.hamiltonian
            )
            state = ExtendedState.from_array([1.1, 0.3, 0.5, 0.4])

            rate = service.extended_flow(
                system=quartic1[0], params=extension.params, state=state
            )

            assert np.allclose(
                rate,
                ham_vector_field(extended_system, state.as_array()),
                rtol=1e-10,
                atol=1e-12,
            )


def test_build_extension_ok(quartic1):
    extension = _extension(quartic1, c=1.0, c0=1.0, m=1, omega=0.5)

    assert extension.dim == 4
    assert extension.indices == (2, 2)
    assert list(extension.observables()) == ["H", "L", "K"]
    assert extension.hamiltonian.name == "H"
    assert extension.integral.name == "K"


def test_build_extension_failure__wrong_regime(harmonic_oscillator):
    with pytest.raises(ServiceValidationError) as ctx:
        _extension(harmonic_oscillator, c=1.0, c0=1.0)

    assert ctx.value.args[0] == "The G solution holds for (c, c0) = (0.0, 2.0), not (1.0, 1.0)"


def test_extended_intervals_ok(subtests):
    base = [(-1.0, 1.0), (-2.0, 2.0)]

    with subtests.test(msg="trigonometric gamma"):
        intervals = service.extended_intervals(ExtensionParamsFactory(c=1.0, c0=1.0), base)

        assert intervals[0] == pytest.approx((0.1 * math.pi, 0.9 * math.pi))
        assert intervals[1:] == [(-1.0, 1.0), *base]

    with subtests.test(msg="trigonometric gamma away from its zeros"):
        intervals = service.extended_intervals(
            ExtensionParamsFactory(c=1.0, c0=1.0, omega=0.5), base
        )

        assert intervals[0] == pytest.approx((0.05 * math.pi, 0.45 * math.pi))

    with subtests.test(msg="hyperbolic gamma"):
        intervals = service.extended_intervals(
            ExtensionParamsFactory(c=1.0, c0=1.0, C=-1.0, u_offset=0.5), base
        )

        assert intervals[0] == pytest.approx((0.7, 2.5))


@pytest.mark.parametrize("m, n", [(1, 1), (2, 1), (3, 2)])
def test_conservation_ok__quartic1(quartic1, m, n):
    extension = _extension(quartic1, c=1.0, c0=1.0, m=m, n=n)

    report = _report(extension, QUARTIC1_STATE)

    for name in ("H", "L", "K"):
        assert report.drifts[name] <= 1e-6, name
    assert np.ptp(report.states[:, 0]) >= 0.1


def test_conservation_ok__vortex_opposite(vortex_opposite, subtests):
    for omega, indices in ((0.0, (1, 1)), (0.05, (2, 2))):
        with subtests.test(msg=f"omega={omega}"):
            extension = _extension(vortex_opposite, c=0.0, c0=0.5, omega=omega)

            report = _report(extension, VORTEX_STATE)

            assert extension.indices == indices
            for name in ("H", "L", "K", "X1t", "Y2t"):
                assert report.drifts[name] <= 1e-6, name
            assert np.ptp(report.states[:, 3]) >= 0.1


def test_conservation_ok__vortex_equal_complex_integral():
    system, solutions = catalog_service.instantiate(
        entry_id="vortex_equal", params={"alpha": 0.25}
    )
    extension = _extension((system, solutions[0]), c=0.0, c0=0.5)

    report = _report(extension, [0.8, 0.3, 0.5, 0.1, 0.0, 0.2])

    assert report.drifts["K_re"] <= 1e-6
    assert report.drifts["K_im"] <= 1e-6
    assert report.drifts["H"] <= 1e-6


def test_conservation_ok__fourth_order_in_step(quartic1):
    extension = _extension(quartic1, c=1.0, c0=1.0)

    coarse = _report(extension, QUARTIC1_STATE, t_final=5.0, dt=0.02, every=1)
    fine = _report(extension, QUARTIC1_STATE, t_final=5.0, dt=0.01, every=1)

    assert 8.0 <= coarse.drifts["H"] / fine.drifts["H"] <= 32.0


@pytest.mark.parametrize("omega", [0.0, 0.1])
@pytest.mark.parametrize(
    "fixture, entry_id, params",
    [
        ("quartic1", "quartic1", {"c": 1.0, "c0": 1.0, "m": 2}),
        ("quartic1", "quartic1", {"c": 1.0, "c0": 1.0, "C": -1.0, "m": 1}),
        ("vortex_opposite", "vortex_opposite", {"c": 0.0, "c0": 0.5, "m": 2, "n": 1}),
    ],
)
def test_involution_ok(request, fixture, entry_id, params, omega):
    extension = _extension(request.getfixturevalue(fixture), **params, omega=omega)

    for state in _states(extension, entry_id, 50):
        result = bracket_check_service.fd_bracket(
            structure=extension.structure,
            f=extension.hamiltonian,
            g=extension.integral,
            state=state,
        )

        assert result.normalized <= 1e-5
