from dataclasses import dataclass

from extkit.diffkit.models.jet import Scalar


@dataclass(frozen=True)
class FdBracket:
    value: Scalar
    scale: float

    @property
    def normalized(self) -> float:
        return float(abs(self.value) / self.scale) if self.scale > 0 else 0.0
