from typing import List

import numpy as np

from extkit.diffkit.models.jet import Jet2
from extkit.diffkit.models.scalar_field import ScalarField, lift
from extkit.shared.exceptions import NonFiniteResultError


def seed_variables(x: np.ndarray, order: int = 2) -> List[Jet2]:
    dim = x.shape[0]
    return [Jet2.variable(value, index, dim, order) for index, value in enumerate(x)]


def evaluate_jet(field: ScalarField, x: np.ndarray, order: int = 2) -> Jet2:
    jet = lift(field.rule(seed_variables(x, order)), field.dim, order)
    if not jet.is_finite():
        raise NonFiniteResultError(
            f"Evaluation of field {field.name or '<anonymous>'} is not finite"
        )
    return jet


def evaluate_value(field: ScalarField, x: np.ndarray):
    value = np.asarray(field.rule(list(x)))[()]
    if not np.isfinite(value):
        raise NonFiniteResultError(
            f"Evaluation of field {field.name or '<anonymous>'} is not finite"
        )
    return value


def evaluate_gradient(field: ScalarField, x: np.ndarray) -> np.ndarray:
    return evaluate_jet(field, x, order=1).gradient
