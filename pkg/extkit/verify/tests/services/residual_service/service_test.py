import pytest

from extkit.catalog.registry import ENTRIES
from extkit.catalog.services.catalog_service import service as catalog_service
from extkit.catalog.services.kuru_negro_service import service as kuru_negro_service
from extkit.diffkit.models import jet as jets
from extkit.diffkit.models.scalar_field import ScalarField
from extkit.extension.models.g_solution import GSolution
from extkit.shared.exceptions import (
    DimensionMismatchError,
    SamplingError,
    ServiceValidationError,
)
from extkit.verify.schemas.sample_schema import SampleSpec
from extkit.verify.services.residual_service import service
from extkit.verify.tests.factories import SampleSpecFactory


def _entry_spec(entry_id: str, count: int = 100, seed: int = 11) -> SampleSpec:
    entry = ENTRIES[entry_id]
    return SampleSpec(
        intervals=entry.intervals(entry.params_schema()),
        count=count,
        seed=seed,
        margin=entry.margin,
    )


def test_pde_residual_ok__harmonic_oscillator(harmonic_oscillator):
    system, solution = harmonic_oscillator

    report = service.pde_residual(
        system=system, solution=solution, c=0.0, c0=2.0, spec=SampleSpecFactory()
    )

    assert report.count == 100
    assert report.skipped == 0
    assert report.max_residual <= 1e-10
    assert len(report.residuals) == 100
    assert len(report.worst_point) == 2


def test_pde_residual_ok__perturbed_c0_is_caught(harmonic_oscillator):
    system, solution = harmonic_oscillator

    report = service.pde_residual(
        system=system,
        solution=solution,
        c=0.0,
        c0=2.0,
        spec=SampleSpecFactory(),
        c0_scale=1.1,
    )

    assert report.max_residual >= 1e-2
    assert min(report.residuals) >= 1e-4


def test_pde_residual_ok__vortex_opposite(vortex_opposite):
    system, solution = vortex_opposite

    report = service.pde_residual(
        system=system,
        solution=solution,
        c=0.0,
        c0=0.5,
        spec=_entry_spec("vortex_opposite"),
    )

    assert abs(report.worst_point[3]) > 0.1
    assert report.max_residual <= 1e-7


def test_pde_residual_ok__deterministic(vortex_opposite):
    system, solution = vortex_opposite
    spec = _entry_spec("vortex_opposite", count=20)

    first = service.pde_residual(system=system, solution=solution, c=0.0, c0=0.5, spec=spec)
    second = service.pde_residual(system=system, solution=solution, c=0.0, c0=0.5, spec=spec)

    assert first == second


def test_pde_residual_failure__wrong_regime(harmonic_oscillator):
    system, solution = harmonic_oscillator

    with pytest.raises(ServiceValidationError) as ctx:
        service.pde_residual(
            system=system, solution=solution, c=1.0, c0=2.0, spec=SampleSpecFactory()
        )

    assert ctx.value.args[0] == "The G solution holds for (c, c0) = (0.0, 2.0), not (1.0, 2.0)"


def test_pde_residual_failure__spec_dimension(harmonic_oscillator):
    system, solution = harmonic_oscillator

    with pytest.raises(DimensionMismatchError) as ctx:
        service.pde_residual(
            system=system,
            solution=solution,
            c=0.0,
            c0=2.0,
            spec=SampleSpecFactory(intervals=[(0.0, 1.0)]),
        )

    assert ctx.value.args[0] == "The sample spec has 1 intervals, the system has dimension 2"


def test_pde_residual_failure__all_points_singular(harmonic_oscillator):
    system, _ = harmonic_oscillator
    solution = GSolution(
        field=ScalarField(dim=2, rule=lambda x: jets.log(-1.0 - x[0] * x[0])),
        c=0.0,
        c0=2.0,
    )

    with pytest.raises(SamplingError) as ctx:
        service.pde_residual(
            system=system,
            solution=solution,
            c=0.0,
            c0=2.0,
            spec=SampleSpecFactory(count=10),
        )

    assert ctx.value.args[0] == "All sample points were singular"


def test_kn_residual_ok__euler_top_on_its_domain():
    system, _ = catalog_service.instantiate(entry_id="euler_top")
    spec = SampleSpec(intervals=[(-1.0, 1.0)] * 3, count=200, seed=3)

    for sign in (1, -1):
        local = kuru_negro_service.euler_kuru_negro_field(
            params={"c": 0.0, "c0": -1.0, "sign": sign}
        )
        report = service.kn_residual(
            system=system,
            field=local.field,
            c=local.c,
            c0=local.c0,
            sign=local.sign,
            spec=spec,
            method="flow",
            domain=local.domain,
        )

        assert report.sign == sign
        assert report.count > 0
        assert report.domain_failures > 0
        assert report.count + report.domain_failures + report.skipped == 200
        assert report.max_residual <= 1e-5


def test_kn_residual_ok__euler_top_off_branch_fails():
    system, _ = catalog_service.instantiate(entry_id="euler_top")
    local = kuru_negro_service.euler_kuru_negro_field(
        params={"c": 0.0, "c0": -1.0, "sign": 1}
    )

    report = service.kn_residual(
        system=system,
        field=local.field,
        c=0.0,
        c0=-1.0,
        sign=-1,
        spec=SampleSpec(intervals=[(-1.0, 1.0)] * 3, count=200, seed=3),
        method="flow",
        domain=local.domain,
    )

    assert report.max_residual >= 1e-2


def test_kn_residual_ok__complex_vortex_solution():
    system, solutions = catalog_service.instantiate(
        entry_id="vortex_opposite",
        params={
            "F1": {"coefficients": [0.0], "imaginary": [1.0]},
            "F2": {"coefficients": [1.0]},
        },
    )

    reports = {
        sign: service.kn_residual(
            system=system,
            field=solutions[0].field,
            c=0.0,
            c0=0.5,
            sign=sign,
            spec=_entry_spec("vortex_opposite", count=50),
        )
        for sign in (1, -1)
    }

    assert reports[1].max_residual <= 1e-8
    assert reports[-1].max_residual >= 0.5


def test_kn_residual_ok__degenerate_radical(harmonic_oscillator):
    system, solution = harmonic_oscillator

    report = service.kn_residual(
        system=system,
        field=solution.field,
        c=0.0,
        c0=0.0,
        sign=1,
        spec=SampleSpecFactory(count=20),
    )

    assert report.mean_residual == pytest.approx(1.0, abs=1e-6)


def test_kn_residual_failure__invalid_sign(harmonic_oscillator):
    system, solution = harmonic_oscillator

    with pytest.raises(ServiceValidationError) as ctx:
        service.kn_residual(
            system=system,
            field=solution.field,
            c=0.0,
            c0=2.0,
            sign=0,
            spec=SampleSpecFactory(),
        )

    assert ctx.value.args[0] == "The sign must be +1 or -1"


def test_kn_residual_failure__empty_domain(harmonic_oscillator):
    system, solution = harmonic_oscillator

    with pytest.raises(SamplingError) as ctx:
        service.kn_residual(
            system=system,
            field=solution.field,
            c=0.0,
            c0=2.0,
            sign=1,
            spec=SampleSpecFactory(count=10),
            domain=lambda x: False,
        )

    assert ctx.value.args[0] == "No sample point lies in the domain of the field"
