from typing import List

from pydantic import BaseModel, ConfigDict


class EntrySummary(BaseModel):
    model_config = ConfigDict(frozen=True)

    id: str
    dim: int
    has_g: bool
    notes: str


class ParameterDescription(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    type: str
    default: object = None
    description: str = ""


class EntryDetails(EntrySummary):
    coordinates: List[str]
    parameters: List[ParameterDescription]
    intervals: List[List[float]]
    margin: float


class SingleValuedness(BaseModel):
    model_config = ConfigDict(frozen=True)

    exponent: float
    nearest_integer: int
    single_valued: bool
