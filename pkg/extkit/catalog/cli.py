from typing import Annotated, List, Optional, Tuple

from typer import Argument, Option, Typer

from extkit.catalog.models.catalog_entry import CatalogEntry
from extkit.catalog.registry import ENTRIES
from extkit.catalog.schemas.entry_schema import EntryParams
from extkit.catalog.services.catalog_service import service as catalog_service
from extkit.extension.models.g_solution import GSolution
from extkit.poisson.models.hamiltonian_system import HamiltonianSystem
from extkit.shared.cli_tools import (
    ConfigOption,
    OutputOption,
    SeedOption,
    command_errors,
    emit_report,
    load_run_config,
)
from extkit.shared.exceptions import ServiceValidationError
from extkit.verify.schemas.run_config_schema import RunConfig

app = Typer()


def system_from_config(
    config: RunConfig, verify: bool = True
) -> Tuple[CatalogEntry, EntryParams, HamiltonianSystem, List[GSolution]]:
    if config.system is None:
        raise ServiceValidationError("No system given, use --system or the config")
    system, solutions = catalog_service.instantiate(
        entry_id=config.system, params=config.system_params, verify=verify
    )
    entry = ENTRIES[config.system]
    params = entry.params_schema.model_validate(config.system_params)
    return entry, params, system, solutions


def require_solution(entry: CatalogEntry, solutions: List[GSolution]) -> GSolution:
    if not solutions:
        raise ServiceValidationError(f"{entry.id}: entry has no G solution")
    return solutions[0]


@app.command("list")
def list_entries(
    include_reference: Annotated[bool, Option("--include-reference")] = False,
    config: ConfigOption = None,
    seed: SeedOption = None,
    output: OutputOption = None,
):
    with command_errors():
        run_config = load_run_config(config, seed=seed, output=output)
        entries = catalog_service.list_entries(include_reference=include_reference)
        emit_report(
            "list",
            run_config,
            metrics={"entries": [entry.model_dump(mode="json") for entry in entries]},
        )


@app.command("show")
def show(
    entry_id: Annotated[Optional[str], Argument()] = None,
    config: ConfigOption = None,
    seed: SeedOption = None,
    output: OutputOption = None,
):
    with command_errors():
        run_config = load_run_config(config, seed=seed, output=output, system=entry_id)
        if run_config.system is None:
            raise ServiceValidationError(
                f"Name an entry, one of {', '.join(sorted(ENTRIES))}"
            )
        details = catalog_service.show(entry_id=run_config.system)
        emit_report("show", run_config, metrics=details.model_dump(mode="json"))
