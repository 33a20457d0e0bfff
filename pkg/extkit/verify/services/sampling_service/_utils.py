import math

import numpy as np

from extkit.diffkit.models.scalar_field import SingularPredicate
from extkit.shared.exceptions import SamplingError
from extkit.verify.models.sample_batch import SampleBatch
from extkit.verify.schemas.sample_schema import SampleSpec


def rejection_limit(count: int, max_rejection_rate: float) -> int:
    """Number of draws allowed before the rejection rate is exceeded."""
    return math.ceil(count / (1.0 - max_rejection_rate))


def draw_points(
    spec: SampleSpec,
    singular: SingularPredicate,
    limit: int,
    max_rejection_rate: float,
) -> SampleBatch:
    rng = np.random.default_rng(spec.seed)
    lows = np.array([low for low, _ in spec.intervals], dtype=float)
    highs = np.array([high for _, high in spec.intervals], dtype=float)

    points = []
    draws = 0
    while len(points) < spec.count:
        if draws >= limit:
            raise SamplingError(
                f"More than {max_rejection_rate:.0%} of the sampled points were rejected"
            )
        point = rng.uniform(lows, highs)
        draws += 1
        if singular(point, spec.margin):
            continue
        points.append(point)
    return SampleBatch(points=points, rejected=draws - len(points))
