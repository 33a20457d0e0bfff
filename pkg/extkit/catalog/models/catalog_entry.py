from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, List, Optional, Tuple, Type

from extkit.catalog.schemas.entry_schema import EntryParams
from extkit.extension.models.g_solution import GSolution
from extkit.poisson.models.hamiltonian_system import HamiltonianSystem

Interval = Tuple[float, float]
Builder = Callable[[EntryParams], Tuple[HamiltonianSystem, Optional[GSolution]]]


@dataclass(frozen=True)
class CatalogEntry:
    """A parameterized system and, when one is known, its G solution.

    ``coordinates`` is the order of the phase point, ``columns`` the order in
    which the coordinates are written out. ``intervals`` gives sampling
    ranges that keep clear of the singular sets by ``margin``.
    """

    id: str
    dim: int
    coordinates: Tuple[str, ...]
    params_schema: Type[EntryParams]
    builder: Builder
    intervals: Callable[[EntryParams], List[Interval]]
    notes: str
    has_g: bool
    margin: float = 0.0
    columns: Optional[Tuple[str, ...]] = None
    reference: bool = False
    report_only: bool = False

    @property
    def display_columns(self) -> Tuple[str, ...]:
        return self.columns or self.coordinates

    def column_order(self) -> List[int]:
        return [self.coordinates.index(name) for name in self.display_columns]
