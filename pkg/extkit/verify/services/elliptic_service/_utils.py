import math

import numpy as np
from scipy.integrate import quad

EPSABS = 1e-14
EPSREL = 1e-13
SUBINTERVALS = 200


def max_sin_squared(phi: float) -> float:
    """Largest sin^2(theta) for theta between 0 and phi."""
    if abs(phi) >= math.pi / 2:
        return 1.0
    return math.sin(phi) ** 2


def incomplete_first_kind(phi: float, k2: float) -> float:
    """F(phi | k2) = integral of (1 - k2 sin^2 theta)^(-1/2) from 0 to phi."""
    if phi == 0:
        return 0.0
    value, _ = quad(
        lambda theta: 1.0 / np.sqrt(1.0 - k2 * np.sin(theta) ** 2),
        0.0,
        phi,
        epsabs=EPSABS,
        epsrel=EPSREL,
        limit=SUBINTERVALS,
    )
    return float(value)
