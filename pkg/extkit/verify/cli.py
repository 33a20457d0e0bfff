import logging
from typing import Annotated, Dict, List, Optional, Tuple

import numpy as np
from typer import Option, Typer

from extkit.catalog.cli import require_solution, system_from_config
from extkit.catalog.schemas.entry_schema import KuruNegroParams
from extkit.catalog.services.kuru_negro_service import service as kuru_negro_service
from extkit.diffkit.models.scalar_field import ScalarField
from extkit.extension.cli import (
    bracket_sweep,
    extended_states,
    extension_for,
    extension_from_config,
    initial_state,
)
from extkit.poisson.services.bracket_service._utils import vector_field
from extkit.settings import settings
from extkit.shared.cli_tools import (
    ConfigOption,
    OutputOption,
    SamplesOption,
    SeedOption,
    SystemOption,
    command_errors,
    emit_report,
    load_run_config,
    sample_spec,
    write_csv,
)
from extkit.shared.exceptions import IntegrationError, ServiceValidationError
from extkit.verify.models.trajectory import (
    IntegrationMethod,
    Trajectory,
    TrajectoryReport,
)
from extkit.verify.schemas.run_config_schema import RunConfig
from extkit.verify.services.bracket_check_service import (
    service as bracket_check_service,
)
from extkit.verify.services.gate_service import service as gate_service
from extkit.verify.services.integration_service import service as integration_service
from extkit.verify.services.residual_service import service as residual_service
from extkit.verify.services.sampling_service import service as sampling_service

logger = logging.getLogger(__name__)

app = Typer()

CONTROL_FLOOR = 1e-2
KN_FLOW_TOLERANCE = 1e-5
CSV_OBSERVABLES = ("H", "L", "K")


def _residual_metrics(report) -> dict:
    return report.model_dump(exclude={"residuals"})


@app.command("check-pde")
def check_pde(
    system: SystemOption = None,
    samples: SamplesOption = None,
    c0_scale: Annotated[
        Optional[float], Option("--c0-scale", help="Perturb c0, for negative controls")
    ] = None,
    config: ConfigOption = None,
    seed: SeedOption = None,
    output: OutputOption = None,
):
    """Residual of X_L^2 G + 2 (cL + c0) G over sampled points."""
    with command_errors():
        run_config = load_run_config(
            config,
            seed=seed,
            output=output,
            system=system,
            samples=samples,
            c0_scale=c0_scale,
        )
        entry, params, base, solutions = system_from_config(run_config, verify=False)
        solution = require_solution(entry, solutions)
        report = residual_service.pde_residual(
            system=base,
            solution=solution,
            c=solution.c,
            c0=solution.c0,
            spec=sample_spec(run_config, entry.intervals(params), entry.margin),
            c0_scale=run_config.c0_scale,
        )
        if run_config.c0_scale == 1.0:
            gate = gate_service.evaluate_gate(
                name=f"pde:{entry.id}",
                value=report.max_residual,
                tol=settings.PDE_TOLERANCE,
                where=report.worst_point,
            )
        else:
            gate = gate_service.evaluate_floor(
                name=f"pde-control:{entry.id}",
                value=report.max_residual,
                floor=CONTROL_FLOOR,
                where=report.worst_point,
            )
        emit_report(
            "check-pde",
            run_config,
            metrics=_residual_metrics(report),
            gates=[gate],
            skipped_points=report.skipped,
        )


def _kn_target(run_config: RunConfig):
    """The field, regime and domain a first-order check runs on."""
    entry, params, base, solutions = system_from_config(run_config, verify=False)
    kn = run_config.kn
    if entry.id == "euler_top":
        overrides = {
            k: v
            for k, v in {"c": kn.c, "c0": kn.c0, "f": kn.f}.items()
            if v is not None
        }
        local = kuru_negro_service.euler_kuru_negro_field(
            params=KuruNegroParams.model_validate(
                {**params.model_dump(), **overrides, "sign": kn.sign}
            )
        )
        return entry, params, base, local.field, local.c, local.c0, local.domain
    solution = require_solution(entry, solutions)
    c = solution.c if kn.c is None else kn.c
    c0 = solution.c0 if kn.c0 is None else kn.c0
    return entry, params, base, solution.field, c, c0, None


@app.command("check-kn")
def check_kn(
    system: SystemOption = None,
    sign: Annotated[Optional[int], Option("--sign")] = None,
    kn_method: Annotated[Optional[str], Option("--method")] = None,
    samples: SamplesOption = None,
    config: ConfigOption = None,
    seed: SeedOption = None,
    output: OutputOption = None,
):
    """Residual of X_L G = sign sqrt(-2 (cL + c0)) G over sampled points."""
    with command_errors():
        run_config = load_run_config(
            config,
            seed=seed,
            output=output,
            system=system,
            sign=sign,
            kn_method=kn_method,
            samples=samples,
        )
        entry, params, base, field, c, c0, domain = _kn_target(run_config)
        kn = run_config.kn
        method = kn.method or ("flow" if domain is not None else "jet")
        report = residual_service.kn_residual(
            system=base,
            field=field,
            c=c,
            c0=c0,
            sign=kn.sign,
            spec=sample_spec(run_config, entry.intervals(params), entry.margin),
            method=method,
            domain=domain,
        )
        tolerance = kn.tolerance or (
            settings.PDE_TOLERANCE if method == "jet" else KN_FLOW_TOLERANCE
        )
        gate = gate_service.evaluate_gate(
            name=f"kn:{entry.id}",
            value=report.max_residual,
            tol=tolerance,
            where=report.worst_point,
        )
        emit_report(
            "check-kn",
            run_config,
            metrics=_residual_metrics(report),
            gates=[gate],
            skipped_points=report.skipped + report.domain_failures,
        )


def _flow_target(run_config: RunConfig):
    """Flow, observables, singular set, state columns and start of a run."""
    if run_config.integration.base:
        entry, params, base, _ = system_from_config(run_config, verify=False)
        spec = sample_spec(run_config, entry.intervals(params), entry.margin, count=1)
        start = initial_state(
            run_config,
            base.dim,
            sampling_service.sample_points(spec=spec, singular=base.is_singular).points,
            base.is_singular,
        )
        observables = {"L": base.hamiltonian.named("L"), **base.observables}
        columns = [entry.coordinates[i] for i in entry.column_order()]
        order = entry.column_order()
        return (
            entry,
            lambda x: vector_field(base, x),
            observables,
            base.is_singular,
            columns,
            order,
            start,
        )

    entry, params, extension = extension_from_config(run_config)
    start = initial_state(
        run_config,
        extension.dim,
        extended_states(run_config, entry, params, extension, count=1),
        extension.is_singular,
    )
    columns = ["u", "p_u", *(entry.coordinates[i] for i in entry.column_order())]
    order = [0, 1, *(i + 2 for i in entry.column_order())]
    return (
        entry,
        extension.flow,
        extension.observables(),
        extension.is_singular,
        columns,
        order,
        start,
    )


def _trajectory_rows(
    report: TrajectoryReport, every: int, order: List[int], names: List[str]
) -> Tuple[List[str], List[List[float]]]:
    """Rows of t, the state in display order, then the observables."""
    header, series = [], []
    for name in names:
        values = report.series[name]
        if np.iscomplexobj(values):
            header.extend((f"{name}_re", f"{name}_im"))
            series.extend((values.real, values.imag))
        else:
            header.append(name)
            series.append(values)
    times = report.times[::every]
    states = report.states[::every]
    rows = [
        [t, *state[order], *(column[i] for column in series)]
        for i, (t, state) in enumerate(zip(times, states))
    ]
    return header, rows


def _drift_gates(
    entry_id: str, drifts: Dict[str, float], names: List[str], tolerance: float
):
    return [
        gate_service.evaluate_gate(
            name=f"drift:{entry_id}:{name}", value=drifts[name], tol=tolerance
        )
        for name in names
        if name in drifts
    ]


@app.command("integrate")
def integrate(
    system: SystemOption = None,
    method: Annotated[Optional[IntegrationMethod], Option("--method")] = None,
    dt: Annotated[
        Optional[float], Option("--dt", help="Step, or tolerance for rkf45")
    ] = None,
    t_final: Annotated[Optional[float], Option("--t-final")] = None,
    every: Annotated[Optional[int], Option("--every")] = None,
    base: Annotated[
        Optional[bool], Option("--base/--extended", help="Integrate L instead of H")
    ] = None,
    csv: Annotated[Optional[str], Option("--csv", help="Trajectory CSV path")] = None,
    config: ConfigOption = None,
    seed: SeedOption = None,
    output: OutputOption = None,
):
    """Integrate the extended (or base) flow and report the drift of its integrals."""
    with command_errors():
        run_config = load_run_config(
            config,
            seed=seed,
            output=output,
            system=system,
            method=method.value if method else None,
            dt=dt,
            t_final=t_final,
            every=every,
            base=base,
            csv=csv,
        )
        integration = run_config.integration
        entry, flow, observables, singular, columns, order, start = _flow_target(
            run_config
        )
        dt_or_tol = integration.dt_or_tol or (
            settings.RK4_DT
            if integration.method == IntegrationMethod.rk4
            else settings.RKF45_TOL
        )
        metrics = {"start": start}
        try:
            trajectory = integration_service.integrate(
                flow=flow,
                state0=start,
                t_final=integration.t_final or settings.T_FINAL,
                method=integration.method,
                dt_or_tol=dt_or_tol,
                singular=singular,
            )
        except IntegrationError as e:
            logger.warning("Integration of %s stopped: %s", entry.id, e)
            gate = gate_service.evaluate_gate(
                name=f"integration:{entry.id}", value=None, tol=0.0
            )
            emit_report(
                "integrate",
                run_config,
                metrics={**metrics, "last_time": e.last_time, "error": str(e)},
                gates=[gate],
            )
        else:
            _report_trajectory(
                run_config, entry.id, trajectory, observables, columns, order, metrics
            )


def _report_trajectory(
    run_config: RunConfig,
    entry_id: str,
    trajectory: Trajectory,
    observables: Dict[str, ScalarField],
    columns: List[str],
    order: List[int],
    metrics: dict,
):
    integration = run_config.integration
    report = integration_service.conservation_report(
        trajectory=trajectory, observables=observables, every=integration.every
    )
    gated = [name for name in observables if name in CSV_OBSERVABLES]
    if run_config.csv:
        header, rows = _trajectory_rows(report, integration.every, order, gated)
        write_csv(run_config.csv, ["t", *columns, *header], rows)
    parts = [part for name in gated for part in (name, f"{name}_re", f"{name}_im")]
    emit_report(
        "integrate",
        run_config,
        metrics={
            **metrics,
            "drifts": report.drifts,
            "steps": trajectory.steps,
            "rejected_steps": trajectory.rejected_steps,
            "final_state": trajectory.final_state,
        },
        gates=_drift_gates(
            entry_id, report.drifts, parts, integration.drift_tolerance
        ),
    )


@app.command("bracket")
def bracket(
    system: SystemOption = None,
    samples: SamplesOption = None,
    config: ConfigOption = None,
    seed: SeedOption = None,
    output: OutputOption = None,
):
    """Finite-difference {H, K} over sampled extended states."""
    with command_errors():
        run_config = load_run_config(
            config, seed=seed, output=output, system=system, samples=samples
        )
        entry, params, extension = extension_from_config(run_config)
        states = extended_states(run_config, entry, params, extension)
        metrics, gate, skipped = bracket_sweep(
            f"involution:{entry.id}", extension, states, run_config.bracket_tolerance
        )
        emit_report(
            "bracket",
            run_config,
            metrics={"indices": list(extension.indices), **metrics},
            gates=[gate],
            skipped_points=skipped,
        )


def _rank_target(run_config: RunConfig):
    """Fields on offer, their default selection, the structure and the states."""
    entry, params, base, solutions = system_from_config(run_config)
    if not solutions:
        fields = {"L": base.hamiltonian.named("L"), **base.observables}
        spec = sample_spec(run_config, entry.intervals(params), entry.margin)
        states = sampling_service.sample_points(spec=spec, singular=base.is_singular)
        return entry, fields, ["L"], base.structure, states.points
    extension = extension_for(run_config, base, solutions[0])
    states = extended_states(run_config, entry, params, extension)
    return (
        entry,
        extension.observables(),
        ["H", "K", "L"],
        extension.structure,
        states,
    )


@app.command("rank")
def rank(
    system: SystemOption = None,
    samples: SamplesOption = None,
    config: ConfigOption = None,
    seed: SeedOption = None,
    output: OutputOption = None,
):
    """Numerical rank of the gradients of the configured fields."""
    with command_errors():
        run_config = load_run_config(
            config, seed=seed, output=output, system=system, samples=samples
        )
        entry, available, defaults, structure, states = _rank_target(run_config)
        names = run_config.fields or defaults
        fields: List[ScalarField] = []
        for name in names:
            if name not in available:
                raise ServiceValidationError(
                    f"Unknown field {name}, one of {', '.join(available)}"
                )
            fields.append(available[name])

        found = bracket_check_service.independence_rank(
            fields=fields, structure=structure, states=states
        )
        # Passes when found >= expected; the real and imaginary parts of a
        # complex field need not be independent of each other
        expected = run_config.expected_rank
        if expected is None:
            expected = len(fields)
        gate = gate_service.evaluate_gate(
            name=f"rank:{entry.id}", value=float(expected - found), tol=0.0
        )
        emit_report(
            "rank",
            run_config,
            metrics={
                "rank": found,
                "expected": expected,
                "fields": names,
                "states": len(states),
            },
            gates=[gate],
        )
