from typing import Tuple

from extkit.gamma.schemas.gamma_schema import GammaParams

from ._service import _gamma_eval, _tagged_trig


def tagged_trig(kappa: float, x: float) -> Tuple[float, float, float]:
    """(S_kappa(x), C_kappa(x), T_kappa(x)), trigonometric for kappa > 0,
    linear for kappa = 0 and hyperbolic for kappa < 0."""
    return _tagged_trig(kappa=float(kappa), x=float(x))


def gamma_eval(params: GammaParams, u: float) -> Tuple[float, float, float]:
    return _gamma_eval(params=params, u=float(u))
