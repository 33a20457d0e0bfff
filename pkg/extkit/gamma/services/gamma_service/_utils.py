from typing import Tuple

import numpy as np

from extkit.diffkit.models import jet as jets
from extkit.diffkit.models.jet import JetOrScalar
from extkit.settings import settings
from extkit.shared.exceptions import PoleError


def tagged_sin_cos(kappa: float, x: JetOrScalar) -> Tuple[JetOrScalar, JetOrScalar]:
    if kappa > 0:
        root = np.sqrt(kappa)
        return jets.sin(root * x) / root, jets.cos(root * x)
    if kappa < 0:
        root = np.sqrt(-kappa)
        return jets.sinh(root * x) / root, jets.cosh(root * x)
    return x, 1.0


def tagged_trig(
    kappa: float, x: JetOrScalar
) -> Tuple[JetOrScalar, JetOrScalar, JetOrScalar]:
    sine, cosine = tagged_sin_cos(kappa, x)
    if abs(jets.value_of(cosine)) < settings.POLE_TOLERANCE:
        at = float(jets.value_of(x))
        raise PoleError(f"The tagged tangent has a pole at x={at!r}")
    return sine, cosine, sine / cosine


def gamma_values(
    c: float, C: float, u: JetOrScalar, u_offset: float = 0.0
) -> Tuple[JetOrScalar, JetOrScalar, JetOrScalar]:
    """gamma, gamma' and gamma'' solving gamma' + c gamma^2 + C = 0."""
    v = u - u_offset
    if c == 0:
        return -C * v, -C * (v * 0.0 + 1.0), v * 0.0
    sine, cosine = tagged_sin_cos(C / c, c * v)
    if abs(jets.value_of(sine)) < settings.POLE_TOLERANCE:
        raise PoleError(f"gamma has a pole at u={float(jets.value_of(u))!r}")
    gamma = cosine / sine
    gamma_prime = -c / (sine * sine)
    return gamma, gamma_prime, -2.0 * c * gamma * gamma_prime
