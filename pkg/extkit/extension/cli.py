import logging
from typing import Annotated, List, Optional, Sequence, Tuple

import numpy as np
from typer import Option, Typer

from extkit.catalog.cli import require_solution, system_from_config
from extkit.catalog.models.catalog_entry import CatalogEntry
from extkit.catalog.schemas.entry_schema import EntryParams
from extkit.diffkit.models.scalar_field import SingularPredicate
from extkit.extension.models.ext_deriv_value import ExtDerivValue
from extkit.extension.models.extended_state import ExtendedState
from extkit.extension.models.extension import Extension
from extkit.extension.models.g_solution import GSolution
from extkit.extension.schemas.extension_schema import ExtensionParams
from extkit.extension.services.characteristic_service import (
    service as characteristic_service,
)
from extkit.extension.services.extension_service import service as extension_service
from extkit.poisson.models.hamiltonian_system import HamiltonianSystem
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
)
from extkit.shared.exceptions import ServiceValidationError, SingularPointError
from extkit.verify.schemas.report_schema import Gate
from extkit.verify.schemas.run_config_schema import RunConfig
from extkit.verify.services.bracket_check_service import (
    service as bracket_check_service,
)
from extkit.verify.services.gate_service import service as gate_service
from extkit.verify.services.sampling_service import service as sampling_service

logger = logging.getLogger(__name__)

app = Typer()

GN_TOLERANCE = 1e-10


def extension_for(
    config: RunConfig, system: HamiltonianSystem, solution: GSolution
) -> Extension:
    """Extension parameters default to the (c, c0) regime of the G solution."""
    params = ExtensionParams.model_validate(
        {"c": solution.c, "c0": solution.c0, **config.extension}
    )
    return extension_service.build_extension(
        system=system, solution=solution, params=params
    )


def extension_from_config(
    config: RunConfig,
) -> Tuple[CatalogEntry, EntryParams, Extension]:
    entry, params, system, solutions = system_from_config(config)
    extension = extension_for(config, system, require_solution(entry, solutions))
    return entry, params, extension


def extended_states(
    config: RunConfig,
    entry: CatalogEntry,
    params: EntryParams,
    extension: Extension,
    count: Optional[int] = None,
) -> List[np.ndarray]:
    intervals = extension_service.extended_intervals(
        extension.params, entry.intervals(params)
    )
    spec = sample_spec(config, intervals, entry.margin, count=count)
    return sampling_service.sample_points(
        spec=spec, singular=extension.is_singular
    ).points


def initial_state(
    config: RunConfig,
    dim: int,
    fallback: Sequence[np.ndarray],
    singular: Optional[SingularPredicate] = None,
) -> np.ndarray:
    """The configured state, else the first sampled one."""
    if config.state is None:
        return np.asarray(fallback[0], dtype=float)
    if len(config.state) != dim:
        raise ServiceValidationError(
            f"State dimension {len(config.state)} does not match dimension {dim}"
        )
    state = np.asarray(config.state, dtype=float)
    if singular is not None and singular(state, 0.0):
        raise SingularPointError(f"State {config.state} lies on the singular set")
    return state


def bracket_sweep(
    name: str, extension: Extension, states: Sequence[np.ndarray], tolerance: float
) -> Tuple[dict, Gate, int]:
    """max |{H, K}| over ``states``, normalised by the gradient scales."""
    worst, worst_state, skipped = 0.0, None, 0
    for state in states:
        try:
            result = bracket_check_service.fd_bracket(
                structure=extension.structure,
                f=extension.hamiltonian,
                g=extension.integral,
                state=state,
            )
        except (ServiceValidationError, ArithmeticError) as e:
            logger.debug("Skipping state %s: %s", state, e)
            skipped += 1
            continue
        if worst_state is None or result.normalized > worst:
            worst, worst_state = result.normalized, state
    if worst_state is None:
        raise ServiceValidationError("No state could be checked")
    gate = gate_service.evaluate_gate(
        name=name, value=worst, tol=tolerance, where=worst_state
    )
    metrics = {"max_bracket": worst, "checked": len(states) - skipped}
    return metrics, gate, skipped


@app.command("extend")
def extend(
    system: SystemOption = None,
    config: ConfigOption = None,
    seed: SeedOption = None,
    output: OutputOption = None,
):
    """Build H and K, evaluate them at the state and spot-check {H, K}."""
    with command_errors():
        run_config = load_run_config(config, seed=seed, output=output, system=system)
        entry, params, extension = extension_from_config(run_config)
        states = extended_states(
            run_config, entry, params, extension, count=run_config.spot_checks
        )
        state = ExtendedState.from_array(
            initial_state(run_config, extension.dim, states, extension.is_singular)
        )

        h_value = extension_service.h_extended(
            system=extension.system, params=extension.params, state=state
        )
        k_value = characteristic_service.characteristic_integral(
            system=extension.system,
            solution=extension.solution,
            params=extension.params,
            state=state,
        )
        metrics, gate, skipped = bracket_sweep(
            f"involution:{entry.id}",
            extension,
            states,
            run_config.bracket_tolerance,
        )
        emit_report(
            "extend",
            run_config,
            metrics={
                "indices": list(extension.indices),
                "state": state.as_array(),
                "H": h_value,
                "K": k_value,
                **metrics,
            },
            gates=[gate],
            skipped_points=skipped,
        )


def _relative_error(a, b) -> float:
    return float(abs(a - b) / max(1.0, abs(b)))


def gn_sweep(n_max: int, samples: int, seed: int) -> Tuple[float, List[float]]:
    """Largest gap between the recursive and closed G_n over random seeds.

    A quarter as many complex seeds follow the real ones.
    """
    rng = np.random.default_rng(seed)
    worst, worst_at = 0.0, []

    def _check(g, xg, lam, n):
        nonlocal worst, worst_at
        pair = ExtDerivValue(value=g, xl_derivative=xg)
        recursive = characteristic_service.gn_recursive(n=n, pair=pair, lam=lam)
        closed = characteristic_service.gn_closed(n=n, pair=pair, lam=lam)
        error = max(
            _relative_error(recursive.value, closed.value),
            _relative_error(recursive.xl_derivative, closed.xl_derivative),
        )
        if error >= worst:
            worst = error
            parts = [complex(v) for v in (g, xg, lam)]
            worst_at = [float(n)] + [p for v in parts for p in (v.real, v.imag)]

    for _ in range(samples):
        g, xg = rng.uniform(0.5, 1.5, size=2)
        lam = float(rng.uniform(-1.0, 1.0))
        _check(float(g), float(xg), lam, int(rng.integers(1, n_max + 1)))
    for _ in range(max(samples // 4, 1)):
        g, xg, lam = (complex(*rng.uniform(-1.0, 1.0, size=2)) for _ in range(3))
        _check(g, xg, lam, int(rng.integers(1, n_max + 1)))
    return worst, worst_at


@app.command("gn-compare")
def gn_compare(
    n_max: Annotated[Optional[int], Option("--n-max")] = None,
    samples: SamplesOption = None,
    config: ConfigOption = None,
    seed: SeedOption = None,
    output: OutputOption = None,
):
    """Compare the G_n recursion with its closed form."""
    with command_errors():
        run_config = load_run_config(
            config, seed=seed, output=output, n_max=n_max, samples=samples
        )
        worst, worst_at = gn_sweep(
            run_config.n_max, run_config.sampling.count, run_config.seed
        )
        gate = gate_service.evaluate_gate(
            name="gn-compare", value=worst, tol=GN_TOLERANCE, where=worst_at
        )
        emit_report(
            "gn-compare",
            run_config,
            metrics={
                "max_rel_err": worst,
                "n_max": run_config.n_max,
                "samples": run_config.sampling.count,
            },
            gates=[gate],
        )
