from typing import List

import numpy as np

from extkit.catalog.models.catalog_entry import CatalogEntry
from extkit.catalog.schemas.catalog_schema import (
    EntryDetails,
    EntrySummary,
    ParameterDescription,
)
from extkit.catalog.schemas.entry_schema import EntryParams
from extkit.diffkit.services.jet_service._utils import evaluate_value
from extkit.extension.models.g_solution import GSolution
from extkit.settings import settings
from extkit.shared.exceptions import NonFiniteResultError, ServiceValidationError
from extkit.verify.schemas.sample_schema import SampleSpec

GATE_SEED = 20240521


def gate_spec(entry: CatalogEntry, params: EntryParams) -> SampleSpec:
    return SampleSpec(
        intervals=entry.intervals(params),
        count=settings.PDE_GATE_SAMPLES,
        seed=GATE_SEED,
        margin=entry.margin,
    )


def vanishes_identically(solution: GSolution, points: List[np.ndarray]) -> bool:
    for x in points:
        try:
            if abs(evaluate_value(solution.field, x)) > 0:
                return False
        except (NonFiniteResultError, ServiceValidationError, ArithmeticError):
            continue
    return True


def summary(entry: CatalogEntry) -> EntrySummary:
    return EntrySummary(
        id=entry.id, dim=entry.dim, has_g=entry.has_g, notes=entry.notes
    )


def _type_name(annotation) -> str:
    if isinstance(annotation, type):
        return annotation.__name__
    return str(annotation).replace("typing.", "")


def details(entry: CatalogEntry) -> EntryDetails:
    defaults = entry.params_schema()
    parameters = [
        ParameterDescription(
            name=name,
            type=_type_name(info.annotation),
            default=_plain_default(getattr(defaults, name)),
            description=info.description or "",
        )
        for name, info in entry.params_schema.model_fields.items()
    ]
    return EntryDetails(
        **summary(entry).model_dump(),
        coordinates=list(entry.coordinates),
        parameters=parameters,
        intervals=[list(interval) for interval in entry.intervals(defaults)],
        margin=entry.margin,
    )


def _plain_default(value):
    if hasattr(value, "model_dump"):
        return value.model_dump(mode="json")
    return value
