from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from extkit.shared.exceptions import ServiceValidationError


@dataclass(frozen=True)
class ExtendedState:
    u: float
    p_u: float
    base: np.ndarray

    def __post_init__(self):
        base = np.asarray(self.base, dtype=float).reshape(-1)
        object.__setattr__(self, "base", base)
        if not (np.isfinite(self.u) and np.isfinite(self.p_u)) or not np.all(
            np.isfinite(base)
        ):
            raise ServiceValidationError("Extended state coordinates must be finite")

    @classmethod
    def from_array(cls, y: Sequence[float]) -> ExtendedState:
        y = np.asarray(y, dtype=float)
        return cls(u=float(y[0]), p_u=float(y[1]), base=y[2:])

    @property
    def dim(self) -> int:
        return self.base.shape[0] + 2

    def as_array(self) -> np.ndarray:
        return np.concatenate(([self.u, self.p_u], self.base))
