from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from extkit.diffkit.models.scalar_field import ScalarField


class GlobalFlag(enum.Enum):
    globally_defined = "globally-defined"
    conditionally_single_valued = "conditionally-single-valued"
    multi_valued = "multi-valued"


@dataclass(frozen=True)
class GSolution:
    """A non-null solution G of X_L^2 G = -2 (cL + c0) G.

    The solution only holds in the (c, c0) regime it was built for.
    ``verified`` and ``max_residual`` are filled in by the catalog gate.
    """

    field: ScalarField
    c: float
    c0: float
    constraints: str = ""
    global_flag: GlobalFlag = GlobalFlag.globally_defined
    verified: Optional[bool] = None
    max_residual: Optional[float] = None
    name: str = ""

    @property
    def dim(self) -> int:
        return self.field.dim

    def is_singular(self, x, margin: float = 0.0) -> bool:
        return self.field.is_singular(x, margin)

    def holds_for(self, c: float, c0: float, tolerance: float = 1e-12) -> bool:
        return abs(c - self.c) <= tolerance and abs(c0 - self.c0) <= tolerance
