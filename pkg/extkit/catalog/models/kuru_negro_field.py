from dataclasses import dataclass
from typing import Callable

import numpy as np

from extkit.diffkit.models.scalar_field import ScalarField


@dataclass(frozen=True)
class KuruNegroField:
    """A local solution of X_L G = sign sqrt(-2 (cL + c0)) G.

    ``domain`` tells whether a point lies where the field takes the branch
    that solves the equation with this sign.
    """

    field: ScalarField
    domain: Callable[[np.ndarray], bool]
    sign: int
    c: float
    c0: float
