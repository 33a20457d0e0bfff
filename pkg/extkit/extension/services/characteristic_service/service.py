from typing import Sequence, Tuple

from extkit.diffkit.models.jet import Scalar
from extkit.diffkit.models.phase_point import as_phase_point
from extkit.extension.models.ext_deriv_value import ExtDerivValue
from extkit.extension.models.extended_state import ExtendedState
from extkit.extension.models.g_solution import GSolution
from extkit.extension.schemas.extension_schema import ExtensionParams
from extkit.poisson.models.hamiltonian_system import HamiltonianSystem

from ._service import (
    _characteristic_integral,
    _gn_closed,
    _gn_recursive,
    _k_char,
    _kbar_char,
    _pd_coeffs,
    _seed_pair,
)


def seed_pair(
    system: HamiltonianSystem,
    solution: GSolution,
    params: ExtensionParams,
    x: Sequence[float],
) -> Tuple[ExtDerivValue, Scalar]:
    """(G, X_L G) at x, and L at x."""
    return _seed_pair(
        system=system, solution=solution, params=params, x=as_phase_point(x)
    )


def gn_recursive(n: int, pair: ExtDerivValue, lam: Scalar) -> ExtDerivValue:
    return _gn_recursive(n=n, pair=pair, lam=lam)


def gn_closed(n: int, pair: ExtDerivValue, lam: Scalar) -> ExtDerivValue:
    return _gn_closed(n=n, pair=pair, lam=lam)


def pd_coeffs(
    m: int, n: int, r: int, p_u: float, gamma: float, lam: Scalar
) -> Tuple[Scalar, Scalar]:
    return _pd_coeffs(m=m, n=n, r=r, p_u=p_u, gamma=gamma, lam=lam)


def k_char(
    system: HamiltonianSystem,
    solution: GSolution,
    params: ExtensionParams,
    state: ExtendedState,
) -> Scalar:
    return _k_char(system=system, solution=solution, params=params, state=state)


def kbar_char(
    system: HamiltonianSystem,
    solution: GSolution,
    params: ExtensionParams,
    state: ExtendedState,
) -> Scalar:
    """K-bar with an even first index; odd m is doubled together with n."""
    return _kbar_char(system=system, solution=solution, params=params, state=state)


def characteristic_integral(
    system: HamiltonianSystem,
    solution: GSolution,
    params: ExtensionParams,
    state: ExtendedState,
) -> Scalar:
    return _characteristic_integral(
        system=system, solution=solution, params=params, state=state
    )


def resolved_indices(params: ExtensionParams) -> Tuple[int, int]:
    return params.resolved_indices
