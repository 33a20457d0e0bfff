from typing import Annotated, Optional, Tuple

from pydantic import BaseModel, ConfigDict, model_validator
from pydantic.fields import Field
from pydantic_core import PydanticCustomError


class ExtensionParams(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    c: float
    c0: float
    C: Annotated[
        float, Field(default=1.0, description="Constant term of the gamma ODE")
    ]
    omega: Annotated[float, Field(default=0.0, description="Coefficient of 1/gamma^2")]
    m: Annotated[int, Field(default=1, ge=1)]
    n: Annotated[int, Field(default=1, ge=1)]
    u_offset: Annotated[
        float,
        Field(default=0.0, description="Translation of u in the gamma solution"),
    ]

    @model_validator(mode="after")
    def validate(self):
        if self.c == 0 and self.c0 == 0:
            raise PydanticCustomError(
                "degenerate_extension",
                "c and c0 cannot both be zero",
            )
        if self.c == 0 and self.C == 0 and self.omega != 0:
            raise PydanticCustomError(
                "vanishing_gamma",
                "gamma vanishes identically for c = C = 0, which needs omega = 0",
            )
        return self

    @property
    def k(self) -> float:
        return self.m / self.n

    @property
    def kappa(self) -> Optional[float]:
        if self.c == 0:
            return None
        return self.C / self.c

    @property
    def resolved_indices(self) -> Tuple[int, int]:
        """Indices of the characteristic integral; odd m is doubled when omega != 0."""
        if self.omega != 0 and self.m % 2:
            return 2 * self.m, 2 * self.n
        return self.m, self.n
