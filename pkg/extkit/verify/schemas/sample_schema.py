import math
from typing import Annotated, List, Tuple

from pydantic import BaseModel, ConfigDict, model_validator
from pydantic.fields import Field
from pydantic_core import PydanticCustomError


class SampleSpec(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    intervals: List[Tuple[float, float]]
    count: Annotated[int, Field(default=100, ge=1)]
    seed: Annotated[int, Field(default=0, ge=0, lt=2**64)]
    margin: Annotated[
        float,
        Field(
            default=0.0,
            ge=0.0,
            description="Points closer than this to a singular set are rejected",
        ),
    ]

    @model_validator(mode="after")
    def validate(self):
        if not self.intervals:
            raise PydanticCustomError(
                "empty_intervals", "At least one interval is needed"
            )
        for low, high in self.intervals:
            if not (math.isfinite(low) and math.isfinite(high)):
                raise PydanticCustomError(
                    "infinite_interval", "Sampling intervals must be finite"
                )
            if low > high:
                raise PydanticCustomError(
                    "reversed_interval",
                    "Interval lower bounds cannot exceed upper bounds",
                )
        return self

    @property
    def dim(self) -> int:
        return len(self.intervals)
