from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Dict, List

import numpy as np


class IntegrationMethod(enum.Enum):
    rk4 = "rk4"
    rkf45 = "rkf45"


@dataclass(frozen=True)
class Trajectory:
    times: np.ndarray
    states: np.ndarray
    method: IntegrationMethod
    steps: int
    rejected_steps: int = 0
    error_estimates: List[float] = field(default_factory=list)

    @property
    def final_state(self) -> np.ndarray:
        return self.states[-1]


@dataclass(frozen=True)
class TrajectoryReport:
    """Observables evaluated along a trajectory.

    ``drifts[name]`` is max_t |O(t) - O(0)| / max(|O(0)|, eps). Complex
    observables also get ``name_re`` and ``name_im`` entries, normalised by
    the same |O(0)|.
    """

    trajectory: Trajectory
    series: Dict[str, np.ndarray]
    drifts: Dict[str, float]

    @property
    def times(self) -> np.ndarray:
        return self.trajectory.times

    @property
    def states(self) -> np.ndarray:
        return self.trajectory.states
