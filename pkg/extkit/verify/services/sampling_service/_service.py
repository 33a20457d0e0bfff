import logging
from typing import Annotated

from fast_depends import Depends, inject

from extkit.diffkit.models.scalar_field import SingularPredicate
from extkit.settings import settings
from extkit.verify.models.sample_batch import SampleBatch
from extkit.verify.schemas.sample_schema import SampleSpec
from extkit.verify.services.sampling_service._dependencies import get_rejection_limit
from extkit.verify.services.sampling_service._utils import draw_points

logger = logging.getLogger(__name__)


@inject(cast=False)
def _sample_points(
    spec: SampleSpec,
    singular: SingularPredicate,
    limit: Annotated[int, Depends(get_rejection_limit, cast=False)],
) -> SampleBatch:
    batch = draw_points(spec, singular, limit, settings.MAX_REJECTION_RATE)
    if batch.rejected:
        logger.debug(
            "Rejected %d of %d draws within margin %s",
            batch.rejected,
            batch.rejected + len(batch),
            spec.margin,
        )
    return batch
