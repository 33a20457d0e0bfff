"""Quartic-in-momentum Hamiltonians on one degree of freedom."""

from typing import List, Tuple

from extkit.catalog.schemas.entry_schema import Quartic1Params, Quartic2Params
from extkit.diffkit.models.scalar_field import ScalarField
from extkit.extension.models.g_solution import GSolution
from extkit.poisson.models.hamiltonian_system import HamiltonianSystem
from extkit.poisson.models.poisson_structure import PoissonStructure

COORDINATES = ("q", "p")
QUARTIC2_MARGIN = 0.05


def _system(name: str, hamiltonian: ScalarField) -> HamiltonianSystem:
    return HamiltonianSystem(
        structure=PoissonStructure.canonical(1),
        hamiltonian=hamiltonian.named("L"),
        name=name,
    )


def build_quartic1(params: Quartic1Params) -> Tuple[HamiltonianSystem, GSolution]:
    """A perfect square plus a constant, extended by G = C1 q + C2."""
    C1, C2, C3, c, c0 = params.C1, params.C2, params.C3, params.c, params.c0
    f = params.f.build()

    def _rule(x):
        q, p = x
        f_q = f(q)
        base = (
            16 * C1 * p * p
            + 8 * C1 * f_q * p
            + 2 * c * C1 * q * q
            + 4 * c * C2 * q
            + C1 * f_q * f_q
            + 8 * C1 * C3
        )
        return base * base / (256 * C1 * C1) - c0 / c

    solution = GSolution(
        field=ScalarField(dim=2, rule=lambda x: C1 * x[0] + C2, name="G"),
        c=c,
        c0=c0,
        constraints="C1 != 0, c != 0",
        name="quartic1",
    )
    return _system("quartic1", ScalarField(dim=2, rule=_rule)), solution


def _g_singular(params: Quartic2Params):
    def _predicate(x, margin: float = 0.0) -> bool:
        return abs(params.C1 * x[0] + params.C2) <= max(margin, 1e-12)

    return _predicate


def _momentum_solution(params: Quartic2Params, name: str) -> GSolution:
    C1, C2 = params.C1, params.C2
    return GSolution(
        field=ScalarField(
            dim=2,
            rule=lambda x: (C1 * x[0] + C2) * x[1],
            singular=_g_singular(params),
            name="G",
        ),
        c=params.c,
        c0=params.c0,
        constraints="C1 != 0, c != 0, C1 q + C2 != 0",
        name=name,
    )


def build_quartic2a(params: Quartic2Params) -> Tuple[HamiltonianSystem, GSolution]:
    """The expanded perfect square, G = (C1 q + C2) p."""
    C1, C2, C3, C4, c, c0 = (
        params.C1,
        params.C2,
        params.C3,
        params.C4,
        params.c,
        params.c0,
    )

    def _rule(x):
        q, p = x
        g = C1 * q + C2
        inner = (
            32 * p * p * (C1**3 * q * q + 2 * C1**2 * C2 * q + C1 * C2**2)
            + C1**3 * c * q**4
            + 4 * C1**2 * C2 * c * q**3
            + 16 * C1**3 * C4 * q * q
            + 5 * C1 * C2**2 * c * q * q
            + (32 * C1**2 * C2 * C4 + 2 * C2**3 * c) * q
            + 16 * C1 * C2**2 * C4
            - 8 * C3
        )
        return inner * inner / (1024 * C1**2 * g**4) - c0 / c

    hamiltonian = ScalarField(dim=2, rule=_rule, singular=_g_singular(params))
    return _system("quartic2a", hamiltonian), _momentum_solution(params, "quartic2a")


def quartic2b_potential(params: Quartic2Params, q):
    C1, C2, C3, C4, c, c0 = (
        params.C1,
        params.C2,
        params.C3,
        params.C4,
        params.c,
        params.c0,
    )
    c3 = c**3
    poly = (
        -(C1**7) * c3 * q**7
        - 8 * C1**6 * C2 * c3 * q**6
        - 28 * C1**5 * C2**2 * c3 * q**5
        - 56 * C1**4 * C2**3 * c3 * q**4
        + (-70 * C1**3 * C2**4 * c3 + 1024 * c0 * C1**7 - 32 * C1**5 * C3 * c * c)
        * q**3
        + (
            4096 * c0 * C1**6 * C2
            - 128 * C1**4 * C2 * C3 * c * c
            - 56 * C1**2 * C2**5 * c3
        )
        * q
        * q
        + (
            -28 * C1 * C2**6 * c3
            + 6144 * c0 * C1**5 * C2**2
            - 192 * C1**3 * C2**2 * C3 * c * c
        )
        * q
        - 8 * C2**7 * c3
        + 4096 * c0 * C1**4 * C2**3
        - 128 * C1**2 * C2**3 * C3 * c * c
    )
    g = C1 * q + C2
    return (C4 - q * poly / (1024 * c * C1**3)) / g**4


def build_quartic2b(params: Quartic2Params) -> Tuple[HamiltonianSystem, GSolution]:
    """L = p^4 + f p^2 + V, not a perfect square in general, G = (C1 q + C2) p."""
    C1, C2, C3, c = params.C1, params.C2, params.C3, params.c

    def _rule(x):
        q, p = x
        g = C1 * q + C2
        f = c * g * g / (16 * C1 * C1) + C3 / (g * g)
        p2 = p * p
        return p2 * p2 + f * p2 + quartic2b_potential(params, q)

    hamiltonian = ScalarField(dim=2, rule=_rule, singular=_g_singular(params))
    return _system("quartic2b", hamiltonian), _momentum_solution(params, "quartic2b")


def quartic1_intervals(params: Quartic1Params) -> List[Tuple[float, float]]:
    return [(-2.0, 2.0), (-2.0, 2.0)]


def quartic2_intervals(params: Quartic2Params) -> List[Tuple[float, float]]:
    return [(-1.0, 1.0), (-1.0, 1.0)]
