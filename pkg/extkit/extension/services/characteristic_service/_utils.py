from math import comb
from typing import Tuple

import numpy as np

from extkit.diffkit.models.jet import Scalar
from extkit.diffkit.services.jet_service._utils import evaluate_jet
from extkit.extension.models.derivation_polynomial import DerivationPolynomial
from extkit.extension.models.ext_deriv_value import ExtDerivValue
from extkit.extension.models.extended_state import ExtendedState
from extkit.extension.models.g_solution import GSolution
from extkit.extension.schemas.extension_schema import ExtensionParams
from extkit.gamma.services.gamma_service._utils import gamma_values
from extkit.poisson.models.hamiltonian_system import HamiltonianSystem
from extkit.settings import settings
from extkit.shared.exceptions import PoleError


def seed_values(
    system: HamiltonianSystem, solution: GSolution, x: np.ndarray
) -> Tuple[ExtDerivValue, Scalar]:
    """(G, X_L G) and L at x from one first-order jet pass."""
    jet_g = evaluate_jet(solution.field, x, order=1)
    jet_l = evaluate_jet(system.hamiltonian, x, order=1)
    xl_g = jet_g.gradient @ system.structure.matrix(x) @ jet_l.gradient
    return ExtDerivValue(value=jet_g.value, xl_derivative=xl_g), jet_l.value


def gn_recursive_pair(n: int, pair: ExtDerivValue, lam: Scalar) -> ExtDerivValue:
    """G_{k+1} = X_L(G) G_k + (1/k) G X_L(G_k), iterated in the derivation algebra."""
    g = DerivationPolynomial.seed(lam)
    xg = g.derive()
    current = g
    for k in range(1, n):
        current = xg * current + (g * current.derive()).scale(1.0 / k)
    return current.pair(pair.value, pair.xl_derivative)


def gn_closed_pair(n: int, pair: ExtDerivValue, lam: Scalar) -> ExtDerivValue:
    xg = ExtDerivValue(value=pair.xl_derivative, xl_derivative=-2.0 * lam * pair.value)
    result = ExtDerivValue.constant(0.0)
    for k in range((n - 1) // 2 + 1):
        term = pair ** (2 * k + 1) * xg ** (n - 2 * k - 1)
        result = result + term * (comb(n, 2 * k + 1) * (-2.0 * lam) ** k)
    return result


def pd_coefficients(
    m: int, n: int, r: int, p_u: Scalar, gamma: Scalar, lam: Scalar
) -> Tuple[Scalar, Scalar]:
    beta = m * gamma / n
    p = sum(
        (
            comb(r, 2 * j) * beta ** (2 * j) * p_u ** (r - 2 * j) * (-2.0 * lam) ** j
            for j in range(r // 2 + 1)
        ),
        start=0.0,
    )
    d = sum(
        (
            comb(r, 2 * j + 1)
            * beta ** (2 * j + 1)
            * p_u ** (r - 2 * j - 1)
            * (-2.0 * lam) ** j
            for j in range((r - 1) // 2 + 1)
        ),
        start=0.0,
    )
    return p, d / n


def characteristic_value(
    pair: ExtDerivValue, lam: Scalar, p_u: float, gamma: float, m: int, n: int
) -> Scalar:
    """U_{m,n}^m applied to G_n."""
    g_n = gn_closed_pair(n, pair, lam)
    p, d = pd_coefficients(m, n, m, p_u, gamma, lam)
    return p * g_n.value + d * g_n.xl_derivative


def characteristic_bar_value(
    pair: ExtDerivValue,
    lam: Scalar,
    p_u: float,
    gamma: float,
    s: int,
    r: int,
    omega: float,
) -> Scalar:
    """(U_{2s,r}^2 + 2 omega / gamma^2)^s applied to G_r."""
    g_r = gn_closed_pair(r, pair, lam)
    total = 0.0
    for j in range(s + 1 if omega != 0 else 1):
        p, d = pd_coefficients(2 * s, r, 2 * (s - j), p_u, gamma, lam)
        weight = comb(s, j) * (2.0 * omega / gamma**2) ** j
        total = total + weight * (p * g_r.value + d * g_r.xl_derivative)
    return total


def bar_indices(params: ExtensionParams) -> Tuple[int, int]:
    if params.m % 2:
        return 2 * params.m, 2 * params.n
    return params.m, params.n


def integral_value(
    system: HamiltonianSystem,
    solution: GSolution,
    params: ExtensionParams,
    state: ExtendedState,
) -> Scalar:
    pair, l_value = seed_values(system, solution, state.base)
    lam = params.c * l_value + params.c0
    gamma, _, _ = gamma_values(params.c, params.C, state.u, params.u_offset)
    if params.omega == 0:
        return characteristic_value(pair, lam, state.p_u, gamma, params.m, params.n)
    if abs(gamma) < settings.POLE_TOLERANCE:
        raise PoleError(f"gamma vanishes at u={state.u!r}")
    m, n = params.resolved_indices
    return characteristic_bar_value(
        pair, lam, state.p_u, gamma, m // 2, n, params.omega
    )
