from typing import Annotated, Any, Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, model_validator
from pydantic.fields import Field
from pydantic_core import PydanticCustomError

from extkit.catalog.schemas.function_schema import FunctionSpec
from extkit.verify.models.trajectory import IntegrationMethod


class SamplingConfig(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    count: Annotated[int, Field(default=100, ge=1)]
    seed: Annotated[Optional[int], Field(default=None, ge=0)]
    margin: Annotated[
        Optional[float],
        Field(default=None, ge=0.0, description="Defaults to the entry margin"),
    ]
    intervals: Annotated[
        Optional[List[Tuple[float, float]]],
        Field(default=None, description="Defaults to the entry intervals"),
    ]


class IntegrationConfig(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    method: IntegrationMethod = IntegrationMethod.rk4
    dt_or_tol: Annotated[Optional[float], Field(default=None, gt=0.0)]
    t_final: Annotated[Optional[float], Field(default=None, gt=0.0)]
    every: Annotated[int, Field(default=1, ge=1)]
    base: Annotated[
        bool, Field(default=False, description="Integrate L on the base instead of H")
    ]
    drift_tolerance: Annotated[float, Field(default=1e-6, gt=0.0)]


class KnConfig(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    sign: int = 1
    method: Annotated[
        Optional[Literal["jet", "flow"]],
        Field(default=None, description="flow on euler_top, jet elsewhere"),
    ]
    c: Optional[float] = None
    c0: Optional[float] = None
    f: Optional[FunctionSpec] = None
    tolerance: Annotated[Optional[float], Field(default=None, gt=0.0)]

    @model_validator(mode="after")
    def validate(self):
        if self.sign not in (1, -1):
            raise PydanticCustomError("invalid_sign", "The sign must be +1 or -1")
        return self


class RunConfig(BaseModel):
    """Everything a CLI run reads, from one JSON document plus flag overrides."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    system: Optional[str] = None
    system_params: Dict[str, Any] = Field(default_factory=dict)
    extension: Annotated[
        Dict[str, Any],
        Field(
            default_factory=dict,
            description="Extension parameters, c and c0 default to the G regime",
        ),
    ]
    sampling: SamplingConfig = Field(default_factory=SamplingConfig)
    integration: IntegrationConfig = Field(default_factory=IntegrationConfig)
    kn: KnConfig = Field(default_factory=KnConfig)
    state: Optional[List[float]] = None
    fields: Annotated[
        Optional[List[str]],
        Field(default=None, description="Defaults to H, K, L, or L on the base"),
    ]
    expected_rank: Annotated[Optional[int], Field(default=None, ge=0)]
    spot_checks: Annotated[int, Field(default=10, ge=1)]
    bracket_tolerance: Annotated[float, Field(default=1e-5, gt=0.0)]
    c0_scale: Annotated[float, Field(default=1.0, gt=0.0)]
    n_max: Annotated[int, Field(default=8, ge=1)]
    output: Optional[str] = None
    csv: Optional[str] = None

    @property
    def seed(self) -> int:
        return self.sampling.seed or 0
