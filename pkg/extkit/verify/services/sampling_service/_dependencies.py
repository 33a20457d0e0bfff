from extkit.settings import settings
from extkit.verify.schemas.sample_schema import SampleSpec
from extkit.verify.services.sampling_service._utils import rejection_limit


def get_rejection_limit(spec: SampleSpec) -> int:
    return rejection_limit(spec.count, settings.MAX_REJECTION_RATE)
