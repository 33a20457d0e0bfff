from fast_depends import Depends, inject

from extkit.verify.services.elliptic_service._dependencies import (
    validate_amplitude,
    validate_modulus,
)
from extkit.verify.services.elliptic_service._utils import incomplete_first_kind


@inject(
    cast=False,
    extra_dependencies=[
        Depends(validate_amplitude, cast=False),
        Depends(validate_modulus, cast=False),
    ],
)
def _elliptic_f(phi: float, k2: float) -> float:
    return incomplete_first_kind(phi, k2)
