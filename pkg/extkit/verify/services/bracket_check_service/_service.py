import logging
from typing import List, Sequence

import numpy as np
from fast_depends import Depends, inject

from extkit.diffkit.models.scalar_field import ScalarField
from extkit.poisson.models.poisson_structure import PoissonStructure
from extkit.verify.models.fd_bracket import FdBracket
from extkit.verify.services.bracket_check_service import _utils
from extkit.verify.services.bracket_check_service._dependencies import (
    validate_bracket_arguments,
    validate_neighbourhood,
    validate_rank_arguments,
    validate_step,
)

logger = logging.getLogger(__name__)


@inject(
    cast=False,
    extra_dependencies=[
        Depends(validate_step, cast=False),
        Depends(validate_bracket_arguments, cast=False),
        Depends(validate_neighbourhood, cast=False),
    ],
)
def _fd_bracket(
    structure: PoissonStructure,
    f: ScalarField,
    g: ScalarField,
    state: np.ndarray,
    h: float,
) -> FdBracket:
    return _utils.fd_bracket_value(structure, f, g, state, h)


@inject(
    cast=False,
    extra_dependencies=[
        Depends(validate_rank_arguments, cast=False),
        Depends(validate_step, cast=False),
    ],
)
def _independence_rank(
    fields: Sequence[ScalarField],
    structure: PoissonStructure,
    states: List[np.ndarray],
    threshold: float,
    h: float,
) -> int:
    ranks = [
        _utils.numerical_rank(_utils.gradient_rows(fields, state, h), threshold)
        for state in states
    ]
    logger.debug("Gradient ranks over %d states: %s", len(states), ranks)
    return min(ranks)
