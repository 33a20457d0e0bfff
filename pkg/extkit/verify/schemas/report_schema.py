from typing import Annotated, Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict
from pydantic.fields import Field


class Gate(BaseModel):
    model_config = ConfigDict(frozen=True, populate_by_name=True)

    name: str
    value: Optional[float]
    tol: float
    passed: Annotated[bool, Field(alias="pass")]
    where: Optional[List[float]] = None


class ResidualReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    max_residual: float
    mean_residual: float
    count: int
    skipped: int
    rejected: int
    worst_point: List[float]
    residuals: List[float]


class KnReport(ResidualReport):
    domain_failures: int
    sign: int


class CommandReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    command: str
    config_echo: Dict[str, Any]
    metrics: Dict[str, Any]
    gates: List[Gate] = Field(default_factory=list)
    skipped_points: int = 0

    @property
    def passed(self) -> bool:
        return all(gate.passed for gate in self.gates)
