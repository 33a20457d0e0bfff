from dataclasses import dataclass
from typing import List

import numpy as np


@dataclass(frozen=True)
class SampleBatch:
    points: List[np.ndarray]
    rejected: int

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)
