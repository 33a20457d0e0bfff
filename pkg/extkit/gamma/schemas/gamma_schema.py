from typing import Optional

from pydantic import BaseModel, ConfigDict


class GammaParams(BaseModel):
    model_config = ConfigDict(frozen=True)

    c: float
    C: float
    u_offset: float = 0.0

    @property
    def kappa(self) -> Optional[float]:
        if self.c == 0:
            return None
        return self.C / self.c
