from typing import Optional

from extkit.diffkit.models.scalar_field import SingularPredicate, never_singular
from extkit.verify.models.sample_batch import SampleBatch
from extkit.verify.schemas.sample_schema import SampleSpec

from ._service import _sample_points


def sample_points(
    spec: SampleSpec, singular: Optional[SingularPredicate] = None
) -> SampleBatch:
    """Uniform points, one coordinate per interval, drawn from the seeded stream.

    Points closer than ``spec.margin`` to the singular set are rejected and
    counted.
    """
    return _sample_points(spec=spec, singular=singular or never_singular)
