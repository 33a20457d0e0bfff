from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from extkit.diffkit.models.jet import Scalar


@dataclass(frozen=True)
class ExtDerivValue:
    """A value together with its X_L derivative.

    Plain numbers are treated as constants along X_L, so mixing them in
    keeps the Leibniz rule exact.
    """

    value: Scalar
    xl_derivative: Scalar

    @classmethod
    def constant(cls, value: Scalar) -> ExtDerivValue:
        return cls(value=value, xl_derivative=0.0)

    def __add__(self, other: Union[ExtDerivValue, Scalar]) -> ExtDerivValue:
        if not isinstance(other, ExtDerivValue):
            return ExtDerivValue(self.value + other, self.xl_derivative)
        return ExtDerivValue(
            self.value + other.value, self.xl_derivative + other.xl_derivative
        )

    __radd__ = __add__

    def __neg__(self) -> ExtDerivValue:
        return ExtDerivValue(-self.value, -self.xl_derivative)

    def __sub__(self, other: Union[ExtDerivValue, Scalar]) -> ExtDerivValue:
        return self + (-other)

    def __rsub__(self, other: Scalar) -> ExtDerivValue:
        return (-self) + other

    def __mul__(self, other: Union[ExtDerivValue, Scalar]) -> ExtDerivValue:
        if not isinstance(other, ExtDerivValue):
            return ExtDerivValue(self.value * other, self.xl_derivative * other)
        return ExtDerivValue(
            self.value * other.value,
            self.xl_derivative * other.value + self.value * other.xl_derivative,
        )

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> ExtDerivValue:
        if exponent < 0:
            raise ValueError("Only non-negative integer powers are supported")
        result = ExtDerivValue.constant(1.0)
        for _ in range(exponent):
            result = result * self
        return result
