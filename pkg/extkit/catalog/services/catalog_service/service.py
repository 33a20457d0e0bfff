from typing import Any, List, Mapping, Optional, Tuple, Union

from extkit.catalog.schemas.catalog_schema import EntryDetails, EntrySummary
from extkit.catalog.schemas.entry_schema import EntryParams
from extkit.extension.models.g_solution import GSolution
from extkit.poisson.models.hamiltonian_system import HamiltonianSystem

from ._service import _instantiate, _list_entries, _show


def list_entries(include_reference: bool = False) -> List[EntrySummary]:
    return _list_entries(include_reference=include_reference)


def show(entry_id: str) -> EntryDetails:
    return _show(entry_id=entry_id)


def instantiate(
    entry_id: str,
    params: Optional[Union[EntryParams, Mapping[str, Any]]] = None,
    verify: bool = True,
) -> Tuple[HamiltonianSystem, List[GSolution]]:
    """Build a catalog system and its G solutions.

    With ``verify`` every G solution goes through the PDE gate before being
    served; entries that are reported rather than gated come back with
    ``verified`` set from the gate.
    """
    return _instantiate(entry_id=entry_id, params=params, verify=verify)
