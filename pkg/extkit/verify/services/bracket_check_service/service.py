from typing import Optional, Sequence

from extkit.diffkit.models.phase_point import as_phase_point
from extkit.diffkit.models.scalar_field import ScalarField
from extkit.poisson.models.poisson_structure import PoissonStructure
from extkit.settings import settings
from extkit.verify.models.fd_bracket import FdBracket

from ._service import _fd_bracket, _independence_rank


def fd_bracket(
    structure: PoissonStructure,
    f: ScalarField,
    g: ScalarField,
    state: Sequence[float],
    h: Optional[float] = None,
) -> FdBracket:
    """{f, g} from central-difference gradients contracted with the bivector.

    Independent of the jet machinery, so it also serves fields that are
    evaluated by value only.
    """
    return _fd_bracket(
        structure=structure,
        f=f,
        g=g,
        state=as_phase_point(state),
        h=settings.FD_STEP if h is None else h,
    )


def independence_rank(
    fields: Sequence[ScalarField],
    structure: PoissonStructure,
    states: Sequence[Sequence[float]],
    threshold: Optional[float] = None,
    h: Optional[float] = None,
) -> int:
    """Smallest numerical rank of the stacked gradients over ``states``.

    Singular values below threshold * sigma_max count as zero.
    """
    return _independence_rank(
        fields=list(fields),
        structure=structure,
        states=[as_phase_point(state) for state in states],
        threshold=settings.SVD_THRESHOLD if threshold is None else threshold,
        h=settings.FD_STEP if h is None else h,
    )
