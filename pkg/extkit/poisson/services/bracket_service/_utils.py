from typing import Tuple

import numpy as np

from extkit.diffkit.models.jet import Jet2
from extkit.diffkit.models.scalar_field import ScalarField
from extkit.diffkit.services.jet_service._utils import evaluate_jet, seed_variables
from extkit.poisson.models.hamiltonian_system import HamiltonianSystem
from extkit.poisson.models.poisson_structure import PoissonStructure


def structure_with_derivatives(
    structure: PoissonStructure, x: np.ndarray
) -> Tuple[np.ndarray, np.ndarray]:
    """Bivector matrix at x and its partial derivatives, indexed [k, i, j] = d_k pi_ij."""
    dim = structure.dim
    matrix = np.zeros((dim, dim))
    derivatives = np.zeros((dim, dim, dim))
    variables = seed_variables(x, order=1)
    for (i, j), entry in structure.entries.items():
        value = entry.rule(variables)
        if isinstance(value, Jet2):
            matrix[i, j], matrix[j, i] = value.value, -value.value
            derivatives[:, i, j] = value.gradient
            derivatives[:, j, i] = -value.gradient
        else:
            matrix[i, j], matrix[j, i] = value, -value
    return matrix, derivatives


def vector_field(system: HamiltonianSystem, x: np.ndarray) -> np.ndarray:
    gradient = evaluate_jet(system.hamiltonian, x, order=1).gradient
    return system.structure.matrix(x) @ gradient


def bracket_value(
    structure: PoissonStructure, f: ScalarField, g: ScalarField, x: np.ndarray
):
    grad_f = evaluate_jet(f, x, order=1).gradient
    grad_g = evaluate_jet(g, x, order=1).gradient
    return grad_f @ structure.matrix(x) @ grad_g


def bracket_gradient(
    structure: PoissonStructure, f: ScalarField, g: ScalarField, x: np.ndarray
) -> np.ndarray:
    """Exact gradient of {f, g} = grad f . pi grad g from second-order jets."""
    jet_f = evaluate_jet(f, x)
    jet_g = evaluate_jet(g, x)
    matrix, derivatives = structure_with_derivatives(structure, x)
    a, b = jet_f.gradient, jet_g.gradient
    return (
        jet_f.hessian @ (matrix @ b)
        + np.einsum("i,kij,j->k", a, derivatives, b)
        + jet_g.hessian @ (matrix.T @ a)
    )


def apply_xl2(system: HamiltonianSystem, f: ScalarField, x: np.ndarray):
    structure, hamiltonian = system.structure, system.hamiltonian
    flow = vector_field(system, x)
    return bracket_gradient(structure, f, hamiltonian, x) @ flow


def jacobi_residual(
    structure: PoissonStructure,
    f: ScalarField,
    g: ScalarField,
    h: ScalarField,
    x: np.ndarray,
):
    matrix = structure.matrix(x)
    gradients = {
        name: evaluate_jet(field, x, order=1).gradient
        for name, field in (("f", f), ("g", g), ("h", h))
    }
    cyclic = (("f", g, h), ("g", h, f), ("h", f, g))
    return sum(
        gradients[outer] @ matrix @ bracket_gradient(structure, inner, last, x)
        for outer, inner, last in cyclic
    )
