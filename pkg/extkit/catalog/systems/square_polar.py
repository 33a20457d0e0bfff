"""The square of a natural Hamiltonian in polar coordinates on E^2."""

from typing import List, Tuple

from extkit.catalog.schemas.entry_schema import SquarePolarParams
from extkit.diffkit.models.jet import cos, sin, tan
from extkit.diffkit.models.scalar_field import ScalarField
from extkit.extension.models.g_solution import GSolution
from extkit.poisson.models.hamiltonian_system import HamiltonianSystem
from extkit.poisson.models.poisson_structure import PoissonStructure

COORDINATES = ("q1", "q2", "p1", "p2")
MARGIN = 0.05


def singular(params: SquarePolarParams):
    """q1 = 0, cos(q2) = 0 and tan(q2) C3 = C2, where V has a removable 0/0."""

    def _predicate(x, margin: float = 0.0) -> bool:
        tolerance = max(margin, 1e-12)
        q1, q2 = x[0], x[1]
        if abs(q1) <= tolerance or abs(cos(q2)) <= tolerance:
            return True
        return abs(tan(q2) * params.C3 - params.C2) <= tolerance

    return _predicate


def potential(params: SquarePolarParams, q1, q2):
    C1, C2, C3, c = params.C1, params.C2, params.C3, params.c
    F = params.F.build()
    sine, cosine, tangent = sin(q2), cos(q2), tan(q2)
    twist = C3 * sine - C2 * cosine
    denominator = tangent * C3 - C2
    quadratic = (
        twist
        * twist
        * (2 * tangent * C2 * C3 - C2 * C2 + C3 * C3)
        / (C3 * C3 * denominator * denominator)
    )
    quadratic_sign = -1.0 if params.printed_sign else 1.0
    return (
        quadratic_sign * c / 8 * quadratic * q1 * q1
        + c / 4 * twist * C1 / (C3 * denominator) * q1
        + F(twist * q1)
    )


def build(params: SquarePolarParams) -> Tuple[HamiltonianSystem, GSolution]:
    C1, C2, C3 = params.C1, params.C2, params.C3

    def _rule(x):
        q1, q2, p1, p2 = x
        natural = p1 * p1 + p2 * p2 / (q1 * q1) + potential(params, q1, q2)
        return natural * natural

    def _g(x):
        q1, q2 = x[0], x[1]
        return (sin(q2) * C2 + cos(q2) * C3) * q1 + C1

    system = HamiltonianSystem(
        structure=PoissonStructure.canonical(2),
        hamiltonian=ScalarField(dim=4, rule=_rule, singular=singular(params), name="L"),
        name="square_polar",
    )
    solution = GSolution(
        field=ScalarField(dim=4, rule=_g, name="G"),
        c=params.c,
        c0=0.0,
        constraints="c0 = 0, C3 != 0",
        name="square_polar",
    )
    return system, solution


def intervals(params: SquarePolarParams) -> List[Tuple[float, float]]:
    return [(0.5, 2.0), (-1.2, 1.2), (-1.0, 1.0), (-1.0, 1.0)]

