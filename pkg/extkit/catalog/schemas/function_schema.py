import enum
from typing import Annotated, Callable, Dict, List

from pydantic import BaseModel, ConfigDict, model_validator
from pydantic.fields import Field
from pydantic_core import PydanticCustomError

from extkit.diffkit.models.jet import JetOrScalar, cos, sin

Function = Callable[[JetOrScalar], JetOrScalar]


class FunctionKind(str, enum.Enum):
    polynomial = "polynomial"
    sin = "sin"
    cos = "cos"


class FunctionSpec(BaseModel):
    """A named built-in function of one variable.

    Polynomials take their coefficients in increasing powers, with an
    optional imaginary part of the same layout. sin and cos evaluate
    amplitude * trig(frequency * x + phase).
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    kind: FunctionKind = FunctionKind.polynomial
    coefficients: Annotated[List[float], Field(default_factory=lambda: [0.0])]
    imaginary: Annotated[List[float], Field(default_factory=list)]
    amplitude: float = 1.0
    frequency: float = 1.0
    phase: float = 0.0

    @model_validator(mode="after")
    def validate(self):
        if self.kind == FunctionKind.polynomial and not self.coefficients:
            raise PydanticCustomError(
                "empty_polynomial", "A polynomial needs at least one coefficient"
            )
        if self.kind != FunctionKind.polynomial and self.imaginary:
            raise PydanticCustomError(
                "imaginary_trig", "Only polynomials take imaginary coefficients"
            )
        return self

    @property
    def is_real(self) -> bool:
        return not any(self.imaginary)

    def build(self) -> Function:
        return FUNCTION_BUILDERS[self.kind](self)


def _polynomial(spec: FunctionSpec) -> Function:
    length = max(len(spec.coefficients), len(spec.imaginary))
    real = spec.coefficients + [0.0] * (length - len(spec.coefficients))
    if spec.is_real:
        coefficients = real
    else:
        imaginary = spec.imaginary + [0.0] * (length - len(spec.imaginary))
        coefficients = [complex(a, b) for a, b in zip(real, imaginary)]

    def _evaluate(x: JetOrScalar) -> JetOrScalar:
        value = coefficients[-1]
        for coefficient in reversed(coefficients[:-1]):
            value = value * x + coefficient
        return value

    return _evaluate


def _sin(spec: FunctionSpec) -> Function:
    return lambda x: spec.amplitude * sin(spec.frequency * x + spec.phase)


def _cos(spec: FunctionSpec) -> Function:
    return lambda x: spec.amplitude * cos(spec.frequency * x + spec.phase)


FUNCTION_BUILDERS: Dict[FunctionKind, Callable[[FunctionSpec], Function]] = {
    FunctionKind.polynomial: _polynomial,
    FunctionKind.sin: _sin,
    FunctionKind.cos: _cos,
}


def constant(value: float) -> FunctionSpec:
    return FunctionSpec(coefficients=[value])
