from typing import Any, Mapping, Optional, Union

from extkit.catalog.models.catalog_entry import CatalogEntry
from extkit.catalog.registry import ENTRIES
from extkit.catalog.schemas.entry_schema import EntryParams
from extkit.shared.exceptions import ServiceValidationError


def get_entry(entry_id: str) -> CatalogEntry:
    try:
        return ENTRIES[entry_id]
    except KeyError:
        raise ServiceValidationError(f"Unknown catalog entry {entry_id}") from None


def get_entry_params(
    entry_id: str, params: Optional[Union[EntryParams, Mapping[str, Any]]]
) -> EntryParams:
    entry = get_entry(entry_id)
    if isinstance(params, entry.params_schema):
        return params
    if isinstance(params, EntryParams):
        params = params.model_dump()
    return entry.params_schema.model_validate(params or {})
