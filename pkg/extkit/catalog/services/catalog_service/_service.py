import dataclasses
import logging
from typing import List, Tuple

from fast_depends import Depends, inject

from extkit.catalog.models.catalog_entry import CatalogEntry
from extkit.catalog.registry import ENTRIES
from extkit.catalog.schemas.catalog_schema import EntryDetails, EntrySummary
from extkit.catalog.schemas.entry_schema import EntryParams
from extkit.catalog.services.catalog_service import _utils
from extkit.catalog.services.catalog_service._dependencies import (
    get_entry,
    get_entry_params,
)
from extkit.catalog.services.catalog_service.signals import gsolution_gated
from extkit.extension.models.g_solution import GSolution
from extkit.poisson.models.hamiltonian_system import HamiltonianSystem
from extkit.settings import settings
from extkit.shared.exceptions import ServiceValidationError
from extkit.verify.services.gate_service import service as gate_service
from extkit.verify.services.residual_service import service as residual_service
from extkit.verify.services.sampling_service import service as sampling_service

logger = logging.getLogger(__name__)


@inject(cast=False)
def _list_entries(include_reference: bool) -> List[EntrySummary]:
    return [
        _utils.summary(entry)
        for entry in ENTRIES.values()
        if include_reference or not entry.reference
    ]


@inject(cast=False)
def _show(
    entry_id: str,
    # Injected
    entry: CatalogEntry = Depends(get_entry, cast=False),
) -> EntryDetails:
    return _utils.details(entry)


def _gate(
    entry: CatalogEntry,
    params: EntryParams,
    system: HamiltonianSystem,
    solution: GSolution,
) -> GSolution:
    spec = _utils.gate_spec(entry, params)
    batch = sampling_service.sample_points(
        spec=spec,
        singular=lambda x, margin=0.0: system.is_singular(x, margin)
        or solution.is_singular(x, margin),
    )
    if _utils.vanishes_identically(solution, batch.points):
        raise ServiceValidationError("The G solution vanishes identically")

    report = residual_service.pde_residual(
        system=system, solution=solution, c=solution.c, c0=solution.c0, spec=spec
    )
    gate = gate_service.evaluate_gate(
        name=f"pde:{entry.id}",
        value=report.max_residual,
        tol=settings.PDE_TOLERANCE,
        where=report.worst_point,
    )
    gated = dataclasses.replace(
        solution, verified=gate.passed, max_residual=report.max_residual
    )
    gsolution_gated.send(entry.id, solution=gated)
    if not gate.passed and not entry.report_only:
        raise ServiceValidationError(
            f"The G solution of {entry.id} failed the PDE gate "
            f"with max residual {report.max_residual:.3e}"
        )
    return gated


@inject(cast=False)
def _instantiate(
    entry_id: str,
    params: object,
    verify: bool,
    # Injected
    entry: CatalogEntry = Depends(get_entry, cast=False),
    entry_params: EntryParams = Depends(get_entry_params, cast=False),
) -> Tuple[HamiltonianSystem, List[GSolution]]:
    system, solution = entry.builder(entry_params)
    logger.info("Instantiated %s with %s", entry.id, entry_params.model_dump())
    if solution is None:
        return system, []
    if verify:
        solution = _gate(entry, entry_params, system, solution)
    return system, [solution]
