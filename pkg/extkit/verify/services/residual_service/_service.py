import logging
from typing import Optional

from fast_depends import Depends, inject

from extkit.diffkit.models.scalar_field import ScalarField
from extkit.extension.models.g_solution import GSolution
from extkit.poisson.models.hamiltonian_system import HamiltonianSystem
from extkit.settings import settings
from extkit.shared.exceptions import SamplingError
from extkit.verify.schemas.report_schema import KnReport, ResidualReport
from extkit.verify.schemas.sample_schema import SampleSpec
from extkit.verify.services.residual_service import _utils
from extkit.verify.services.residual_service._dependencies import (
    validate_c0_scale,
    validate_field_dimension,
    validate_sign,
    validate_solution_dimension,
    validate_solution_regime,
    validate_spec_dimension,
)
from extkit.verify.services.sampling_service import service as sampling_service

logger = logging.getLogger(__name__)


@inject(
    cast=False,
    extra_dependencies=[
        Depends(validate_solution_dimension, cast=False),
        Depends(validate_spec_dimension, cast=False),
        Depends(validate_solution_regime, cast=False),
        Depends(validate_c0_scale, cast=False),
    ],
)
def _pde_residual(
    system: HamiltonianSystem,
    solution: GSolution,
    c: float,
    c0: float,
    spec: SampleSpec,
    c0_scale: float,
) -> ResidualReport:
    batch = sampling_service.sample_points(
        spec=spec,
        singular=lambda x, margin=0.0: system.is_singular(x, margin)
        or solution.is_singular(x, margin),
    )
    perturbed_c0 = c0 * c0_scale
    points, residuals, skipped = [], [], 0
    for x in batch:
        try:
            residual = _utils.pde_point_residual(
                system, solution.field, c, perturbed_c0, x, settings.RESIDUAL_EPSILON
            )
        except _utils.POINT_ERRORS as exc:
            logger.debug("Skipped point %s: %s", list(x), exc)
            skipped += 1
            continue
        points.append(x)
        residuals.append(residual)
    if not residuals:
        raise SamplingError("All sample points were singular")
    return ResidualReport(
        **_utils.summarize(points, residuals),
        skipped=skipped,
        rejected=batch.rejected,
    )


@inject(
    cast=False,
    extra_dependencies=[
        Depends(validate_field_dimension, cast=False),
        Depends(validate_spec_dimension, cast=False),
        Depends(validate_sign, cast=False),
    ],
)
def _kn_residual(
    system: HamiltonianSystem,
    field: ScalarField,
    c: float,
    c0: float,
    sign: int,
    spec: SampleSpec,
    method: _utils.KnMethod,
    domain: Optional[_utils.DomainPredicate],
) -> KnReport:
    batch = sampling_service.sample_points(
        spec=spec,
        singular=lambda x, margin=0.0: system.is_singular(x, margin)
        or field.is_singular(x, margin),
    )
    points, residuals = [], []
    skipped = domain_failures = 0
    for x in batch:
        if not _utils.in_domain(domain, x):
            domain_failures += 1
            continue
        try:
            residual = _utils.kn_point_residual(
                system,
                field,
                c,
                c0,
                sign,
                x,
                method,
                settings.FLOW_FD_STEP,
                settings.RESIDUAL_EPSILON,
            )
        except _utils.POINT_ERRORS as exc:
            logger.debug("Skipped point %s: %s", list(x), exc)
            skipped += 1
            continue
        points.append(x)
        residuals.append(residual)
    if not residuals:
        raise SamplingError("No sample point lies in the domain of the field")
    if domain_failures:
        logger.info(
            "%d of %d points lie outside the domain of %s",
            domain_failures,
            len(batch),
            field.name or "the field",
        )
    return KnReport(
        **_utils.summarize(points, residuals),
        skipped=skipped,
        rejected=batch.rejected,
        domain_failures=domain_failures,
        sign=sign,
    )
