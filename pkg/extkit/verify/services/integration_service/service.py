from typing import Mapping, Optional, Sequence, Union

import numpy as np

from extkit.diffkit.models.scalar_field import (
    ScalarField,
    SingularPredicate,
    never_singular,
)
from extkit.extension.models.extended_state import ExtendedState
from extkit.verify.models.trajectory import (
    IntegrationMethod,
    Trajectory,
    TrajectoryReport,
)

from ._service import _conservation_report, _integrate
from ._utils import Rate


def integrate(
    flow: Rate,
    state0: Union[ExtendedState, Sequence[float]],
    t_final: float,
    method: IntegrationMethod,
    dt_or_tol: float,
    singular: Optional[SingularPredicate] = None,
) -> Trajectory:
    """Integrate dy/dt = flow(y) from t=0.

    rk4 takes equal steps no longer than ``dt_or_tol``; rkf45 adapts its
    step to keep the embedded error below ``dt_or_tol``. Leaving the domain
    raises IntegrationError carrying the last good time.
    """
    if isinstance(state0, ExtendedState):
        state0 = state0.as_array()
    return _integrate(
        flow=flow,
        state0=np.asarray(state0, dtype=float).reshape(-1),
        t_final=float(t_final),
        method=IntegrationMethod(method),
        dt_or_tol=float(dt_or_tol),
        singular=singular or never_singular,
    )


def conservation_report(
    trajectory: Trajectory,
    observables: Mapping[str, ScalarField],
    every: int = 1,
) -> TrajectoryReport:
    return _conservation_report(
        trajectory=trajectory, observables=observables, every=every
    )
