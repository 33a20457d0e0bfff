"""Local solution of the first-order ansatz for the Euler top.

With X1 = I1 I2 (M - 2 I3 L), X2 = I1 I3 (2 I2 L - M) and t = m1 sqrt(I2 (I1 - I3) / X1):

    G = f(L) exp(-sign A sqrt(-2 (cL + c0) / X2) F(arcsin t | k2))

where A = I1 I2 I3 / sqrt(I2 (I1 - I3)) and k2 = -I3 (I1 - I2) X1 / (I2 (I1 - I3) X2).
Square roots of negative numbers take the principal complex branch.
"""

import math
from dataclasses import dataclass

import numpy as np

from extkit.catalog.schemas.entry_schema import KuruNegroParams
from extkit.verify.services.elliptic_service import service as elliptic_service

BRANCH_TOLERANCE = 1e-6


@dataclass(frozen=True)
class EulerInvariants:
    energy: float
    casimir: float
    x1: float
    x2: float


def invariants(params: KuruNegroParams, m: np.ndarray) -> EulerInvariants:
    I1, I2, I3 = params.I1, params.I2, params.I3
    energy = 0.5 * (m[0] ** 2 / I1 + m[1] ** 2 / I2 + m[2] ** 2 / I3)
    casimir = float(m @ m)
    return EulerInvariants(
        energy=energy,
        casimir=casimir,
        x1=I1 * I2 * (casimir - 2 * I3 * energy),
        x2=I1 * I3 * (2 * I2 * energy - casimir),
    )


def modulus(params: KuruNegroParams, inv: EulerInvariants) -> float:
    I1, I2, I3 = params.I1, params.I2, params.I3
    return -I3 * (I1 - I2) * inv.x1 / (I2 * (I1 - I3) * inv.x2)


def scale_squared(params: KuruNegroParams, inv: EulerInvariants) -> float:
    return params.I2 * (params.I1 - params.I3) / inv.x1


def prefactor(params: KuruNegroParams) -> complex:
    I1, I2, I3 = params.I1, params.I2, params.I3
    return I1 * I2 * I3 / np.sqrt(complex(I2 * (I1 - I3)))


def level_root(params: KuruNegroParams, inv: EulerInvariants) -> complex:
    return np.sqrt(complex(-2.0 * (params.c * inv.energy + params.c0) / inv.x2))


def field_value(params: KuruNegroParams, m: np.ndarray) -> complex:
    inv = invariants(params, m)
    t = math.sqrt(scale_squared(params, inv)) * m[0]
    integral = elliptic_service.elliptic_f(phi=math.asin(t), k2=modulus(params, inv))
    f = params.f.build()
    exponent = -params.sign * prefactor(params) * level_root(params, inv) * integral
    return complex(f(inv.energy) * np.exp(exponent))


def branch(params: KuruNegroParams, m: np.ndarray, inv: EulerInvariants) -> complex:
    """The ratio of X_L G / G to sign sqrt(-2 (cL + c0)); -1 on the solving branch."""
    I2, I3 = params.I2, params.I3
    s = math.sqrt(scale_squared(params, inv))
    t = s * m[0]
    k2 = modulus(params, inv)
    m1_rate = m[1] * m[2] * (I2 - I3) / (I2 * I3)
    level = params.c * inv.energy + params.c0
    return (
        prefactor(params)
        * level_root(params, inv)
        * s
        * m1_rate
        / (
            np.sqrt(complex(-2.0 * level))
            * math.sqrt(1.0 - t * t)
            * math.sqrt(1.0 - k2 * t * t)
        )
    )


def in_domain(params: KuruNegroParams, m: np.ndarray) -> bool:
    inv = invariants(params, m)
    if inv.x1 == 0 or inv.x2 == 0:
        return False
    if scale_squared(params, inv) <= 0:
        return False
    t2 = scale_squared(params, inv) * m[0] ** 2
    if t2 >= 1.0 or 1.0 - modulus(params, inv) * t2 <= 0:
        return False
    if params.c * inv.energy + params.c0 == 0:
        return True
    return abs(branch(params, m, inv) + 1.0) <= BRANCH_TOLERANCE
