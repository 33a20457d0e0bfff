from typing import List, Sequence

import numpy as np

from extkit.diffkit.models.scalar_field import ScalarField
from extkit.diffkit.services.jet_service._utils import evaluate_value
from extkit.poisson.models.poisson_structure import PoissonStructure
from extkit.verify.models.fd_bracket import FdBracket


def fd_gradient(field: ScalarField, y: np.ndarray, h: float) -> np.ndarray:
    """Central differences of ``field`` at y, one coordinate at a time."""
    dim = y.shape[0]
    gradient = []
    for index in range(dim):
        step = np.zeros(dim)
        step[index] = h
        forward = evaluate_value(field, y + step)
        backward = evaluate_value(field, y - step)
        gradient.append((forward - backward) / (2.0 * h))
    return np.array(gradient)


def fd_bracket_value(
    structure: PoissonStructure,
    f: ScalarField,
    g: ScalarField,
    y: np.ndarray,
    h: float,
) -> FdBracket:
    grad_f = fd_gradient(f, y, h)
    grad_g = fd_gradient(g, y, h)
    matrix = structure.matrix(y)
    scale = float(
        np.linalg.norm(grad_f) * np.linalg.norm(matrix) * np.linalg.norm(grad_g)
    )
    return FdBracket(value=grad_f @ matrix @ grad_g, scale=scale)


def gradient_rows(
    fields: Sequence[ScalarField], y: np.ndarray, h: float
) -> np.ndarray:
    """One row per real field; complex fields give a real and an imaginary row."""
    rows: List[np.ndarray] = []
    for field in fields:
        gradient = fd_gradient(field, y, h)
        if np.iscomplexobj(gradient):
            rows.extend((gradient.real, gradient.imag))
        else:
            rows.append(gradient)
    return np.array(rows, dtype=float)


def numerical_rank(matrix: np.ndarray, threshold: float) -> int:
    singular_values = np.linalg.svd(matrix, compute_uv=False)
    if singular_values.size == 0 or singular_values[0] == 0:
        return 0
    return int(np.sum(singular_values > threshold * singular_values[0]))
