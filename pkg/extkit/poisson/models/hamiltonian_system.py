from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from extkit.diffkit.models.scalar_field import ScalarField
from extkit.poisson.models.poisson_structure import PoissonStructure
from extkit.shared.exceptions import DimensionMismatchError


@dataclass(frozen=True)
class HamiltonianSystem:
    structure: PoissonStructure
    hamiltonian: ScalarField
    observables: Mapping[str, ScalarField] = field(default_factory=dict)
    name: str = ""

    def __post_init__(self):
        if self.hamiltonian.dim != self.structure.dim:
            raise DimensionMismatchError(
                f"Hamiltonian dimension {self.hamiltonian.dim} does not match "
                f"structure dimension {self.structure.dim}"
            )
        for name, observable in self.observables.items():
            if observable.dim != self.structure.dim:
                raise DimensionMismatchError(
                    f"Observable {name} has dimension {observable.dim}, "
                    f"expected {self.structure.dim}"
                )

    @property
    def dim(self) -> int:
        return self.structure.dim

    def is_singular(self, x: np.ndarray, margin: float = 0.0) -> bool:
        return self.hamiltonian.is_singular(x, margin) or self.structure.is_singular(
            x, margin
        )
