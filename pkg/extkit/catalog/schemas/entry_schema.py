import math
from typing import Annotated, List

from pydantic import BaseModel, ConfigDict, model_validator
from pydantic.fields import Field
from pydantic_core import PydanticCustomError

from extkit.catalog.schemas.function_schema import FunctionSpec, constant

VORTEX_ALPHA = 1.0 / (8.0 * math.pi)


class EntryParams(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")


class HarmonicOscillatorParams(EntryParams):
    omega: Annotated[float, Field(default=2.0, gt=0)]


def _real_function(spec: FunctionSpec, name: str):
    if not spec.is_real:
        raise PydanticCustomError(
            "complex_function", "{name} must be real-valued", {"name": name}
        )


def _nonzero(value: float, name: str):
    if value == 0:
        raise PydanticCustomError(
            "zero_constant", "{name} cannot be zero", {"name": name}
        )


class Quartic1Params(EntryParams):
    C1: float = 1.0
    C2: float = 0.0
    C3: float = 0.0
    c: float = 1.0
    c0: float = 1.0
    f: Annotated[
        FunctionSpec,
        Field(default_factory=lambda: constant(0.0), description="f(q)"),
    ]

    @model_validator(mode="after")
    def validate(self):
        _nonzero(self.C1, "C1")
        _nonzero(self.c, "c")
        _real_function(self.f, "f")
        return self


class Quartic2Params(EntryParams):
    C1: float = 1.0
    C2: float = 2.0
    C3: float = 0.5
    C4: float = 1.0
    c: float = 1.0
    c0: float = 1.0

    @model_validator(mode="after")
    def validate(self):
        _nonzero(self.C1, "C1")
        _nonzero(self.c, "c")
        return self


class SquarePolarParams(EntryParams):
    C1: float = 1.0
    C2: float = 0.5
    C3: float = 1.0
    c: float = 1.0
    F: Annotated[
        FunctionSpec,
        Field(
            default_factory=lambda: constant(0.0),
            description="F((sin(q2) C3 - cos(q2) C2) q1)",
        ),
    ]
    printed_sign: Annotated[
        bool,
        Field(
            default=False,
            description="Use -c/8 on the quadratic term of V as typeset",
        ),
    ]

    @model_validator(mode="after")
    def validate(self):
        _nonzero(self.C3, "C3")
        _real_function(self.F, "F")
        return self


class VortexParams(EntryParams):
    k: Annotated[float, Field(default=1.0, gt=0)]
    c0: Annotated[float, Field(default=0.5, gt=0)]
    alpha: Annotated[float, Field(default=VORTEX_ALPHA, gt=0)]
    F1: Annotated[FunctionSpec, Field(default_factory=lambda: constant(1.0))]
    F2: Annotated[FunctionSpec, Field(default_factory=lambda: constant(0.0))]


class LotkaVolterraParams(EntryParams):
    a: float = 1.0
    b: float = 1.0
    d: float = 1.0
    g: float = 1.0


def _validate_inertia(moments: List[float]):
    if any(moment <= 0 for moment in moments):
        raise PydanticCustomError(
            "non_positive_inertia", "The moments of inertia must be positive"
        )
    if len(set(moments)) != len(moments):
        raise PydanticCustomError(
            "repeated_inertia", "The moments of inertia must be distinct"
        )


class EulerTopParams(EntryParams):
    I1: float = 1.0
    I2: float = 2.0
    I3: float = 3.0

    @model_validator(mode="after")
    def validate(self):
        _validate_inertia([self.I1, self.I2, self.I3])
        return self


class KuruNegroParams(EulerTopParams):
    c: float = 0.0
    c0: float = -1.0
    sign: Annotated[int, Field(default=1, description="+1 or -1")]
    f: Annotated[
        FunctionSpec,
        Field(default_factory=lambda: constant(1.0), description="f(L)"),
    ]

    @model_validator(mode="after")
    def validate_sign(self):
        if self.sign not in (1, -1):
            raise PydanticCustomError("invalid_sign", "The sign must be +1 or -1")
        return self
