from extkit.poisson.models.poisson_structure import PoissonStructure

from ._service import _extend_structure


def extend_structure(structure: PoissonStructure) -> PoissonStructure:
    return _extend_structure(structure=structure)
