import logging

from fast_depends import inject

from extkit.poisson.models.poisson_structure import PoissonStructure
from extkit.poisson.services.structure_service._utils import extended_structure

logger = logging.getLogger(__name__)


@inject(cast=False)
def _extend_structure(structure: PoissonStructure) -> PoissonStructure:
    extended = extended_structure(structure)
    logger.debug("Extended structure %s to dimension %d", structure.name, extended.dim)
    return extended
