import math
from typing import Callable, Dict, Optional, Tuple

import numpy as np

from extkit.diffkit.models.scalar_field import ScalarField, SingularPredicate
from extkit.diffkit.services.jet_service._utils import evaluate_value
from extkit.shared.exceptions import (
    IntegrationError,
    NonFiniteResultError,
    ServiceValidationError,
    SingularPointError,
)
from extkit.verify.models.butcher_tableau import RK4, RKF45, ButcherTableau
from extkit.verify.models.trajectory import IntegrationMethod, Trajectory

Rate = Callable[[np.ndarray], np.ndarray]

MIN_FACTOR = 0.2
MAX_FACTOR = 5.0
SAFETY = 0.9
UNDERFLOW = 1e-12

# exceptions a rate function raises when the state leaves its domain
DOMAIN_ERRORS = (
    ServiceValidationError,
    ArithmeticError,
    FloatingPointError,
    ValueError,
)


def rk_step(
    tableau: ButcherTableau, rate: Rate, y: np.ndarray, h: float
) -> Tuple[np.ndarray, Optional[np.ndarray]]:
    """One explicit Runge-Kutta step, with the embedded error when available."""
    slopes = np.zeros((tableau.stages, y.shape[0]))
    for stage in range(tableau.stages):
        trial = y + h * (tableau.a[stage, :stage] @ slopes[:stage])
        slopes[stage] = rate(trial)
    y_next = y + h * (tableau.b @ slopes)
    if not tableau.adaptive:
        return y_next, None
    return y_next, h * ((tableau.b - tableau.b_low) @ slopes)


def _guarded_step(
    tableau: ButcherTableau, rate: Rate, y: np.ndarray, h: float, t: float
) -> Tuple[np.ndarray, Optional[np.ndarray]]:
    try:
        return rk_step(tableau, rate, y, h)
    except DOMAIN_ERRORS as exc:
        raise IntegrationError(
            f"The flow could not be evaluated after t={t!r}: {exc}", last_time=t
        ) from exc


def _check_state(y: np.ndarray, t: float, last_time: float, singular):
    if not np.all(np.isfinite(y)):
        raise IntegrationError(
            f"The state is not finite at t={t!r}", last_time=last_time
        )
    if singular(y, 0.0):
        raise IntegrationError(
            f"The trajectory entered the singular set at t={t!r}",
            last_time=last_time,
        )


def integrate_fixed(
    rate: Rate,
    y0: np.ndarray,
    t_final: float,
    dt: float,
    singular: SingularPredicate,
) -> Trajectory:
    steps = max(1, math.ceil(t_final / dt - 1e-9))
    h = t_final / steps
    times = np.linspace(0.0, t_final, steps + 1)
    states = np.empty((steps + 1, y0.shape[0]))
    states[0] = y0
    y = y0
    for index in range(steps):
        t = times[index]
        y, _ = _guarded_step(RK4, rate, y, h, t)
        _check_state(y, times[index + 1], t, singular)
        states[index + 1] = y
    return Trajectory(
        times=times, states=states, method=IntegrationMethod.rk4, steps=steps
    )


def error_norm(error: np.ndarray, y: np.ndarray, tol: float) -> float:
    return float(np.max(np.abs(error) / (tol * (1.0 + np.abs(y)))))


def step_factor(norm: float) -> float:
    if norm == 0:
        return MAX_FACTOR
    return min(MAX_FACTOR, max(MIN_FACTOR, SAFETY * norm ** (-1.0 / 5.0)))


def integrate_adaptive(
    rate: Rate,
    y0: np.ndarray,
    t_final: float,
    tol: float,
    singular: SingularPredicate,
) -> Trajectory:
    t, y = 0.0, y0
    h = min(t_final, 1e-2)
    times, states, errors = [0.0], [y0], []
    rejected = 0
    while t_final - t > 1e-14 * max(1.0, abs(t_final)):
        h = min(h, t_final - t)
        if h < UNDERFLOW * max(1.0, abs(t)):
            raise IntegrationError(
                f"The adaptive step underflowed at t={t!r}", last_time=t
            )
        y_next, error = _guarded_step(RKF45, rate, y, h, t)
        norm = error_norm(error, y, tol) if np.all(np.isfinite(y_next)) else math.inf
        if norm <= 1.0:
            _check_state(y_next, t + h, t, singular)
            t += h
            y = y_next
            times.append(t)
            states.append(y)
            errors.append(float(np.max(np.abs(error))))
        else:
            rejected += 1
        h *= step_factor(norm) if math.isfinite(norm) else MIN_FACTOR
    return Trajectory(
        times=np.array(times),
        states=np.array(states),
        method=IntegrationMethod.rkf45,
        steps=len(times) - 1,
        rejected_steps=rejected,
        error_estimates=errors,
    )


def observable_series(
    name: str, field: ScalarField, times: np.ndarray, states: np.ndarray
) -> np.ndarray:
    values = []
    for t, y in zip(times, states):
        if field.is_singular(y):
            raise SingularPointError(f"Observable {name} is singular at t={float(t)!r}")
        try:
            values.append(evaluate_value(field, y))
        except (NonFiniteResultError, SingularPointError) as exc:
            raise SingularPointError(
                f"Observable {name} is singular at t={float(t)!r}"
            ) from exc
    return np.array(values)


def drifts(name: str, series: np.ndarray, epsilon: float) -> Dict[str, float]:
    """max_t |O(t) - O(0)| / max(|O(0)|, epsilon), split by part for complex O."""
    start = series[0]
    scale = max(abs(start), epsilon)
    result = {name: float(np.max(np.abs(series - start)) / scale)}
    if np.iscomplexobj(series):
        result[f"{name}_re"] = float(np.max(np.abs(series.real - start.real)) / scale)
        result[f"{name}_im"] = float(np.max(np.abs(series.imag - start.imag)) / scale)
    return result
