from typing import Optional, Union

from extkit.diffkit.models.scalar_field import ScalarField
from extkit.extension.models.g_solution import GSolution
from extkit.poisson.models.hamiltonian_system import HamiltonianSystem
from extkit.verify.schemas.report_schema import KnReport, ResidualReport
from extkit.verify.schemas.sample_schema import SampleSpec

from ._service import _kn_residual, _pde_residual
from ._utils import DomainPredicate, KnMethod


def pde_residual(
    system: HamiltonianSystem,
    solution: GSolution,
    c: float,
    c0: float,
    spec: SampleSpec,
    c0_scale: float = 1.0,
) -> ResidualReport:
    """Relative residual of X_L^2 G + 2 (cL + c0) G over sampled points.

    ``c0_scale`` multiplies c0 after the regime check, for negative controls.
    """
    return _pde_residual(
        system=system, solution=solution, c=c, c0=c0, spec=spec, c0_scale=c0_scale
    )


def kn_residual(
    system: HamiltonianSystem,
    field: ScalarField,
    c: float,
    c0: float,
    sign: int,
    spec: SampleSpec,
    method: Union[KnMethod, str] = KnMethod.jet,
    domain: Optional[DomainPredicate] = None,
) -> KnReport:
    return _kn_residual(
        system=system,
        field=field,
        c=c,
        c0=c0,
        sign=sign,
        spec=spec,
        method=KnMethod(method),
        domain=domain,
    )
