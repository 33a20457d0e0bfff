from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Dict, Mapping, Tuple

import numpy as np

from extkit.diffkit.models.scalar_field import ScalarField
from extkit.extension.models.g_solution import GSolution
from extkit.extension.schemas.extension_schema import ExtensionParams
from extkit.poisson.models.hamiltonian_system import HamiltonianSystem
from extkit.poisson.models.poisson_structure import PoissonStructure


@dataclass(frozen=True)
class Extension:
    """An extended Hamiltonian H on (u, p_u, x) with its characteristic integral K.

    ``integral`` is evaluated by value only; its derivatives are taken by
    finite differences where needed.
    """

    system: HamiltonianSystem
    solution: GSolution
    params: ExtensionParams
    structure: PoissonStructure
    hamiltonian: ScalarField
    integral: ScalarField
    rate: Callable[[np.ndarray], np.ndarray]
    indices: Tuple[int, int]
    base_observables: Mapping[str, ScalarField] = field(default_factory=dict)

    @property
    def dim(self) -> int:
        return self.structure.dim

    def flow(self, y: np.ndarray) -> np.ndarray:
        return self.rate(y)

    def is_singular(self, y: np.ndarray, margin: float = 0.0) -> bool:
        return self.hamiltonian.is_singular(y, margin) or self.integral.is_singular(
            y, margin
        )

    def observables(self) -> Dict[str, ScalarField]:
        return {
            "H": self.hamiltonian,
            "L": self.base_observables["L"],
            "K": self.integral,
            **{k: v for k, v in self.base_observables.items() if k != "L"},
        }
