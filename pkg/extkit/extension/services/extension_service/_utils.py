import math
from typing import List, Tuple

import numpy as np

from extkit.diffkit.models.jet import Jet2, JetOrScalar, value_of
from extkit.diffkit.models.scalar_field import ScalarField, embed, never_singular
from extkit.diffkit.services.jet_service._utils import evaluate_jet
from extkit.extension.models.extended_state import ExtendedState
from extkit.extension.models.g_solution import GSolution
from extkit.extension.schemas.extension_schema import ExtensionParams
from extkit.extension.services.characteristic_service._utils import integral_value
from extkit.gamma.services.gamma_service._utils import gamma_values, tagged_sin_cos
from extkit.poisson.models.hamiltonian_system import HamiltonianSystem
from extkit.poisson.services.structure_service._utils import EXTENSION_OFFSET
from extkit.settings import settings
from extkit.shared.exceptions import PoleError

Interval = Tuple[float, float]


def hamiltonian_value(
    params: ExtensionParams, l_value: JetOrScalar, u: JetOrScalar, p_u: JetOrScalar
) -> JetOrScalar:
    """H = p_u^2 / 2 - k^2 gamma' L + k^2 c0 gamma^2 + omega / gamma^2."""
    gamma, gamma_prime, _ = gamma_values(params.c, params.C, u, params.u_offset)
    k2 = params.k**2
    value = (
        0.5 * p_u * p_u
        - k2 * gamma_prime * l_value
        + k2 * params.c0 * gamma * gamma
    )
    if params.omega == 0:
        return value
    if abs(value_of(gamma)) < settings.POLE_TOLERANCE:
        raise PoleError(f"gamma vanishes at u={float(value_of(u))!r}")
    return value + params.omega / (gamma * gamma)


def extended_rate(
    system: HamiltonianSystem, params: ExtensionParams, y: np.ndarray
) -> np.ndarray:
    u, p_u, x = y[0], y[1], y[EXTENSION_OFFSET:]
    gamma, gamma_prime, gamma_second = gamma_values(
        params.c, params.C, u, params.u_offset
    )
    jet_l = evaluate_jet(system.hamiltonian, x, order=1)
    k2 = params.k**2
    p_u_rate = (
        k2 * gamma_second * jet_l.value - 2.0 * k2 * params.c0 * gamma * gamma_prime
    )
    if params.omega != 0:
        if abs(gamma) < settings.POLE_TOLERANCE:
            raise PoleError(f"gamma vanishes at u={float(u)!r}")
        p_u_rate += 2.0 * params.omega * gamma_prime / gamma**3
    base_rate = -k2 * gamma_prime * (system.structure.matrix(x) @ jet_l.gradient)
    return np.concatenate(([p_u, p_u_rate], base_rate))


def gamma_singular(params: ExtensionParams):
    """Poles of gamma, and its zeros when omega != 0, read on the u coordinate."""

    def _predicate(y: np.ndarray, margin: float = 0.0) -> bool:
        tolerance = max(margin, settings.POLE_TOLERANCE)
        v = y[0] - params.u_offset
        if params.c == 0:
            return params.omega != 0 and abs(params.C * v) <= tolerance
        sine, cosine = tagged_sin_cos(params.C / params.c, params.c * v)
        if abs(sine) <= tolerance:
            return True
        return params.omega != 0 and abs(cosine) <= tolerance

    return _predicate


def _joined(*predicates):
    active = [p for p in predicates if p is not never_singular]

    def _predicate(y: np.ndarray, margin: float = 0.0) -> bool:
        return any(p(y, margin) for p in active)

    return _predicate


def hamiltonian_field(
    system: HamiltonianSystem, params: ExtensionParams
) -> ScalarField:
    dim = system.dim + EXTENSION_OFFSET
    l_rule = system.hamiltonian.rule

    def _rule(y):
        return hamiltonian_value(params, l_rule(y[EXTENSION_OFFSET:]), y[0], y[1])

    return ScalarField(
        dim=dim,
        rule=_rule,
        singular=_joined(
            gamma_singular(params),
            embed(system.hamiltonian, dim, EXTENSION_OFFSET).singular,
        ),
        name="H",
    )


def integral_field(
    system: HamiltonianSystem, solution: GSolution, params: ExtensionParams
) -> ScalarField:
    dim = system.dim + EXTENSION_OFFSET

    def _rule(y):
        if any(isinstance(v, Jet2) for v in y):
            raise TypeError("The characteristic integral is evaluated by value only")
        return integral_value(system, solution, params, ExtendedState.from_array(y))

    def _base_singular(y: np.ndarray, margin: float = 0.0) -> bool:
        x = y[EXTENSION_OFFSET:]
        return system.is_singular(x, margin) or solution.is_singular(x, margin)

    return ScalarField(
        dim=dim,
        rule=_rule,
        codomain=solution.field.codomain,
        singular=_joined(gamma_singular(params), _base_singular),
        name="K",
    )


def u_interval(params: ExtensionParams) -> Interval:
    """A u range free of gamma poles, and of gamma zeros when omega != 0."""
    kappa = params.kappa
    if kappa is None or kappa <= 0:
        low, high = 0.2, 2.0
    else:
        span = math.pi / (math.sqrt(kappa) * abs(params.c))
        if params.omega != 0:
            span /= 2
        low, high = 0.1 * span, 0.9 * span
    return low + params.u_offset, high + params.u_offset


def extended_intervals(
    params: ExtensionParams, base_intervals: List[Interval]
) -> List[Interval]:
    return [u_interval(params), (-1.0, 1.0), *base_intervals]
