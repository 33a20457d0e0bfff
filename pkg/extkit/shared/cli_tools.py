import csv
import json
import logging
from contextlib import contextmanager
from pathlib import Path
from typing import Annotated, Any, Iterable, List, Mapping, Optional, Sequence, Tuple

import typer
from pydantic import ValidationError

from extkit.settings import get_settings
from extkit.shared.exceptions import SamplingError, ServiceValidationError
from extkit.shared.tools import format_float, to_json_text
from extkit.verify.schemas.report_schema import CommandReport, Gate
from extkit.verify.schemas.run_config_schema import RunConfig
from extkit.verify.schemas.sample_schema import SampleSpec

logger = logging.getLogger(__name__)

ConfigOption = Annotated[
    Optional[Path], typer.Option("--config", help="JSON run configuration")
]
SeedOption = Annotated[
    Optional[int], typer.Option("--seed", help="Overrides EXTKIT_SEED and the file")
]
OutputOption = Annotated[
    Optional[Path], typer.Option("--output", help="Report path, stdout when omitted")
]
SystemOption = Annotated[Optional[str], typer.Option("--system", help="Catalog id")]
SamplesOption = Annotated[Optional[int], typer.Option("--samples")]

# Flag name -> path in the run configuration
OVERRIDES = {
    "system": ("system",),
    "samples": ("sampling", "count"),
    "method": ("integration", "method"),
    "dt": ("integration", "dt_or_tol"),
    "t_final": ("integration", "t_final"),
    "every": ("integration", "every"),
    "base": ("integration", "base"),
    "sign": ("kn", "sign"),
    "kn_method": ("kn", "method"),
    "c0_scale": ("c0_scale",),
    "n_max": ("n_max",),
    "csv": ("csv",),
}


def _read_config(path: Optional[Path]) -> dict:
    if path is None:
        return {}
    try:
        data = json.loads(Path(path).read_text())
    except OSError as e:
        raise ServiceValidationError(
            f"Cannot read config {path}: {e.strerror}"
        ) from None
    except json.JSONDecodeError as e:
        raise ServiceValidationError(
            f"Config {path} is not valid JSON: {e.msg}"
        ) from None
    if not isinstance(data, dict):
        raise ServiceValidationError(f"Config {path} must hold a JSON object")
    return data


def _set(data: dict, path: Sequence[str], value: Any):
    for key in path[:-1]:
        data = data.setdefault(key, {})
        if not isinstance(data, dict):
            raise ServiceValidationError(f"Config key {key} must hold an object")
    data[path[-1]] = value


def load_run_config(
    config_path: Optional[Path],
    seed: Optional[int] = None,
    output: Optional[Path] = None,
    **flags: Any,
) -> RunConfig:
    """Merge flags over the config file; the seed reads flag, EXTKIT_SEED, then file."""
    data = _read_config(config_path)
    for name, value in flags.items():
        if value is not None:
            _set(data, OVERRIDES[name], value)
    if output is not None:
        data["output"] = str(output)

    env_seed = get_settings().EXTKIT_SEED
    if seed is not None:
        _set(data, ("sampling", "seed"), seed)
    elif env_seed is not None:
        _set(data, ("sampling", "seed"), env_seed)
    return RunConfig.model_validate(data)


@contextmanager
def command_errors():
    """Invalid input and configuration end the command with exit code 2."""
    try:
        yield
    except ValidationError as e:
        typer.echo(f"Invalid configuration: {e}", err=True)
        raise typer.Exit(code=2)
    except (ServiceValidationError, SamplingError) as e:
        typer.echo(f"Error: {e}", err=True)
        raise typer.Exit(code=2)


def emit_report(
    command: str,
    config: RunConfig,
    metrics: Mapping[str, Any],
    gates: Iterable[Gate] = (),
    skipped_points: int = 0,
):
    report = CommandReport(
        command=command,
        config_echo=config.model_dump(mode="json"),
        metrics=dict(metrics),
        gates=list(gates),
        skipped_points=skipped_points,
    )
    text = to_json_text(report.model_dump(by_alias=True)) + "\n"
    if config.output:
        Path(config.output).write_text(text)
        logger.info("Wrote %s report to %s", command, config.output)
    else:
        typer.echo(text, nl=False)
    raise typer.Exit(code=0 if report.passed else 1)


def write_csv(path: str, header: List[str], rows: Iterable[Sequence[float]]):
    with open(path, "w", newline="") as f:
        writer = csv.writer(f, delimiter=",", lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([format_float(value) for value in row])
    logger.info("Wrote trajectory to %s", path)


def sample_spec(
    config: RunConfig,
    intervals: List[Tuple[float, float]],
    margin: float,
    count: Optional[int] = None,
) -> SampleSpec:
    """Sampling settings from the run config, falling back to the entry's."""
    sampling = config.sampling
    return SampleSpec(
        intervals=sampling.intervals or intervals,
        count=count or sampling.count,
        seed=config.seed,
        margin=margin if sampling.margin is None else sampling.margin,
    )
