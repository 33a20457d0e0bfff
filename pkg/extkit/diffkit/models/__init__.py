from extkit.diffkit.models.jet import Jet2
from extkit.diffkit.models.phase_point import PhasePoint, as_phase_point
from extkit.diffkit.models.scalar_field import Codomain, ScalarField, never_singular

__all__ = [
    "Codomain",
    "Jet2",
    "PhasePoint",
    "ScalarField",
    "as_phase_point",
    "never_singular",
]
