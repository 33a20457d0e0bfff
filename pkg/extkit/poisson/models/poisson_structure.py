from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Dict, Mapping, Tuple

import numpy as np

from extkit.diffkit.models.scalar_field import ScalarField
from extkit.shared.exceptions import DimensionMismatchError, ServiceValidationError

EntryKey = Tuple[int, int]


class StructureKind(enum.Enum):
    canonical = "canonical"
    custom = "custom"
    extended = "extended"


@dataclass(frozen=True)
class PoissonStructure:
    """A Poisson bivector on ``dim`` coordinates.

    Only the entries above the diagonal are stored; the matrix is rebuilt
    antisymmetric at every evaluation, so antisymmetry holds exactly.
    """

    dim: int
    kind: StructureKind
    entries: Mapping[EntryKey, ScalarField] = field(default_factory=dict)
    name: str = ""

    def __post_init__(self):
        if self.dim < 1:
            raise ServiceValidationError("Structure dimension must be positive")
        if self.kind == StructureKind.canonical and self.dim % 2:
            raise ServiceValidationError(
                "A canonical structure needs an even dimension"
            )
        for (i, j), entry in self.entries.items():
            if not 0 <= i < j < self.dim:
                raise ServiceValidationError(
                    f"Bivector entry ({i}, {j}) must lie above the diagonal"
                )
            if entry.dim != self.dim:
                raise DimensionMismatchError(
                    f"Bivector entry ({i}, {j}) has dimension {entry.dim}, "
                    f"expected {self.dim}"
                )

    @classmethod
    def canonical(cls, degrees_of_freedom: int) -> PoissonStructure:
        dim = 2 * degrees_of_freedom
        one = ScalarField.constant(1.0, dim)
        return cls(
            dim=dim,
            kind=StructureKind.canonical,
            entries={
                (i, i + degrees_of_freedom): one for i in range(degrees_of_freedom)
            },
            name=f"canonical_{dim}",
        )

    @classmethod
    def custom(
        cls, dim: int, entries: Dict[EntryKey, ScalarField], name: str = ""
    ) -> PoissonStructure:
        return cls(dim=dim, kind=StructureKind.custom, entries=entries, name=name)

    def is_singular(self, x: np.ndarray, margin: float = 0.0) -> bool:
        return any(entry.is_singular(x, margin) for entry in self.entries.values())

    def matrix(self, x: np.ndarray) -> np.ndarray:
        values = np.zeros((self.dim, self.dim))
        point = list(x)
        for (i, j), entry in self.entries.items():
            value = entry.rule(point)
            values[i, j] = value
            values[j, i] = -value
        return values

    def __call__(self, x: np.ndarray) -> np.ndarray:
        return self.matrix(x)
