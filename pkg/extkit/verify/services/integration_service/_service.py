import logging
from typing import Mapping

import numpy as np
from fast_depends import Depends, inject

from extkit.diffkit.models.scalar_field import ScalarField, SingularPredicate
from extkit.settings import settings
from extkit.verify.models.trajectory import (
    IntegrationMethod,
    Trajectory,
    TrajectoryReport,
)
from extkit.verify.services.integration_service import _utils
from extkit.verify.services.integration_service._dependencies import (
    validate_dt_or_tol,
    validate_every,
    validate_observables,
    validate_state0,
    validate_t_final,
)

logger = logging.getLogger(__name__)


@inject(
    cast=False,
    extra_dependencies=[
        Depends(validate_state0, cast=False),
        Depends(validate_t_final, cast=False),
        Depends(validate_dt_or_tol, cast=False),
    ],
)
def _integrate(
    flow: _utils.Rate,
    state0: np.ndarray,
    t_final: float,
    method: IntegrationMethod,
    dt_or_tol: float,
    singular: SingularPredicate,
) -> Trajectory:
    if method == IntegrationMethod.rk4:
        trajectory = _utils.integrate_fixed(flow, state0, t_final, dt_or_tol, singular)
    else:
        trajectory = _utils.integrate_adaptive(
            flow, state0, t_final, dt_or_tol, singular
        )
    logger.debug(
        "Integrated to t=%s with %s in %d steps (%d rejected)",
        t_final,
        method.value,
        trajectory.steps,
        trajectory.rejected_steps,
    )
    return trajectory


@inject(
    cast=False,
    extra_dependencies=[
        Depends(validate_observables, cast=False),
        Depends(validate_every, cast=False),
    ],
)
def _conservation_report(
    trajectory: Trajectory, observables: Mapping[str, ScalarField], every: int
) -> TrajectoryReport:
    times = trajectory.times[::every]
    states = trajectory.states[::every]
    series, drifts = {}, {}
    for name, field in observables.items():
        series[name] = _utils.observable_series(name, field, times, states)
        drifts.update(_utils.drifts(name, series[name], settings.DRIFT_EPSILON))
    return TrajectoryReport(trajectory=trajectory, series=series, drifts=drifts)
