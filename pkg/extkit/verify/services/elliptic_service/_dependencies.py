import math

from extkit.shared.exceptions import ServiceValidationError
from extkit.verify.services.elliptic_service._utils import max_sin_squared


def validate_amplitude(phi: float):
    if not math.isfinite(phi):
        raise ServiceValidationError("The amplitude must be finite")


def validate_modulus(phi: float, k2: float):
    if not math.isfinite(k2):
        raise ServiceValidationError("The elliptic modulus must be finite")
    if k2 * max_sin_squared(phi) >= 1.0:
        raise ServiceValidationError(
            "The elliptic modulus must satisfy k2 sin^2(theta) < 1 "
            "on the integration range"
        )
