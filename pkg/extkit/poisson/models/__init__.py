from extkit.poisson.models.hamiltonian_system import HamiltonianSystem
from extkit.poisson.models.poisson_structure import PoissonStructure, StructureKind

__all__ = ["HamiltonianSystem", "PoissonStructure", "StructureKind"]
