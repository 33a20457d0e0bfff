from extkit.diffkit.models.scalar_field import ScalarField, embed
from extkit.poisson.models.poisson_structure import PoissonStructure, StructureKind

# (u, p_u) lead the extended coordinates
EXTENSION_OFFSET = 2


def extended_structure(structure: PoissonStructure) -> PoissonStructure:
    dim = structure.dim + EXTENSION_OFFSET
    entries = {(0, 1): ScalarField.constant(1.0, dim)}
    for (i, j), entry in structure.entries.items():
        entries[(i + EXTENSION_OFFSET, j + EXTENSION_OFFSET)] = embed(
            entry, dim, EXTENSION_OFFSET
        )
    return PoissonStructure(
        dim=dim,
        kind=StructureKind.extended,
        entries=entries,
        name=f"extended_{structure.name}" if structure.name else "extended",
    )
