from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

Scalar = Union[int, float, complex, np.number]


def _as_scalar(value: Scalar):
    # numpy scalars divide by zero into inf/nan instead of raising
    array = np.asarray(value)
    if array.dtype.kind in "biu":
        array = array.astype(float)
    return array[()]


@dataclass(frozen=True)
class Jet2:
    """Value, gradient and Hessian of a scalar, propagated together.

    ``hessian`` is None for first-order jets; any operation involving a
    first-order jet yields a first-order jet.
    """

    value: Scalar
    gradient: np.ndarray
    hessian: Optional[np.ndarray] = None

    # numpy scalars defer to the reflected Jet2 operators
    __array_ufunc__ = None

    def __post_init__(self):
        object.__setattr__(self, "value", _as_scalar(self.value))

    @classmethod
    def constant(cls, value: Scalar, dim: int, order: int = 2) -> Jet2:
        return cls(
            value=value,
            gradient=np.zeros(dim),
            hessian=np.zeros((dim, dim)) if order == 2 else None,
        )

    @classmethod
    def variable(cls, value: Scalar, index: int, dim: int, order: int = 2) -> Jet2:
        gradient = np.zeros(dim)
        gradient[index] = 1.0
        return cls(
            value=value,
            gradient=gradient,
            hessian=np.zeros((dim, dim)) if order == 2 else None,
        )

    @property
    def dim(self) -> int:
        return self.gradient.shape[0]

    @property
    def order(self) -> int:
        return 1 if self.hessian is None else 2

    def is_finite(self) -> bool:
        finite = bool(np.isfinite(self.value)) and bool(
            np.all(np.isfinite(self.gradient))
        )
        if self.hessian is not None:
            finite = finite and bool(np.all(np.isfinite(self.hessian)))
        return finite

    def compose(self, d0: Scalar, d1: Scalar, d2: Scalar) -> Jet2:
        """Chain rule for a univariate function with derivatives d0, d1, d2."""
        hessian = (
            None
            if self.hessian is None
            else d1 * self.hessian + d2 * np.outer(self.gradient, self.gradient)
        )
        return Jet2(value=d0, gradient=d1 * self.gradient, hessian=hessian)

    def scale(self, factor: Scalar) -> Jet2:
        return Jet2(
            value=self.value * factor,
            gradient=self.gradient * factor,
            hessian=None if self.hessian is None else self.hessian * factor,
        )

    def __add__(self, other: Union[Jet2, Scalar]) -> Jet2:
        if not isinstance(other, Jet2):
            return Jet2(self.value + other, self.gradient, self.hessian)
        hessian = (
            None
            if self.hessian is None or other.hessian is None
            else self.hessian + other.hessian
        )
        return Jet2(self.value + other.value, self.gradient + other.gradient, hessian)

    __radd__ = __add__

    def __neg__(self) -> Jet2:
        return self.scale(-1.0)

    def __sub__(self, other: Union[Jet2, Scalar]) -> Jet2:
        return self + (-other)

    def __rsub__(self, other: Union[Jet2, Scalar]) -> Jet2:
        return (-self) + other

    def __mul__(self, other: Union[Jet2, Scalar]) -> Jet2:
        if not isinstance(other, Jet2):
            return self.scale(other)
        hessian = None
        if self.hessian is not None and other.hessian is not None:
            cross = np.outer(self.gradient, other.gradient)
            hessian = (
                self.hessian * other.value
                + self.value * other.hessian
                + cross
                + cross.T
            )
        return Jet2(
            value=self.value * other.value,
            gradient=self.gradient * other.value + self.value * other.gradient,
            hessian=hessian,
        )

    __rmul__ = __mul__

    def reciprocal(self) -> Jet2:
        v = self.value
        return self.compose(1.0 / v, -1.0 / (v * v), 2.0 / (v * v * v))

    def __truediv__(self, other: Union[Jet2, Scalar]) -> Jet2:
        if not isinstance(other, Jet2):
            return self.scale(1.0 / _as_scalar(other))
        return self * other.reciprocal()

    def __rtruediv__(self, other: Scalar) -> Jet2:
        return self.reciprocal().scale(other)

    def __pow__(self, exponent: Union[Jet2, Scalar]) -> Jet2:
        if isinstance(exponent, Jet2):
            return exp(exponent * log(self))
        return power(self, exponent)

    def __rpow__(self, base: Scalar) -> Jet2:
        return exp(self * log(_as_scalar(base)))


JetOrScalar = Union[Jet2, Scalar]


def _scalar_power(x, a):
    return np.power(_as_scalar(x), a)


def power(x: JetOrScalar, a: Scalar) -> JetOrScalar:
    """x**a for a constant exponent, principal branch for complex x."""
    if not isinstance(x, Jet2):
        return _scalar_power(x, a)
    if a == 0:
        return Jet2.constant(1.0, x.dim, x.order)
    if a == 1:
        return x
    v = x.value
    d1 = a * _scalar_power(v, a - 1)
    d2 = a * (a - 1) * _scalar_power(v, a - 2)
    return x.compose(_scalar_power(v, a), d1, d2)


def exp(x: JetOrScalar) -> JetOrScalar:
    if not isinstance(x, Jet2):
        return np.exp(_as_scalar(x))
    e = np.exp(x.value)
    return x.compose(e, e, e)


def log(x: JetOrScalar) -> JetOrScalar:
    if not isinstance(x, Jet2):
        return np.log(_as_scalar(x))
    v = x.value
    return x.compose(np.log(v), 1.0 / v, -1.0 / (v * v))


def sqrt(x: JetOrScalar) -> JetOrScalar:
    if not isinstance(x, Jet2):
        return np.sqrt(_as_scalar(x))
    r = np.sqrt(x.value)
    return x.compose(r, 0.5 / r, -0.25 / (r * r * r))


def sin(x: JetOrScalar) -> JetOrScalar:
    if not isinstance(x, Jet2):
        return np.sin(_as_scalar(x))
    s, c = np.sin(x.value), np.cos(x.value)
    return x.compose(s, c, -s)


def cos(x: JetOrScalar) -> JetOrScalar:
    if not isinstance(x, Jet2):
        return np.cos(_as_scalar(x))
    s, c = np.sin(x.value), np.cos(x.value)
    return x.compose(c, -s, -c)


def tan(x: JetOrScalar) -> JetOrScalar:
    if not isinstance(x, Jet2):
        return np.tan(_as_scalar(x))
    t = np.tan(x.value)
    return x.compose(t, 1.0 + t * t, 2.0 * t * (1.0 + t * t))


def sinh(x: JetOrScalar) -> JetOrScalar:
    if not isinstance(x, Jet2):
        return np.sinh(_as_scalar(x))
    s, c = np.sinh(x.value), np.cosh(x.value)
    return x.compose(s, c, s)


def cosh(x: JetOrScalar) -> JetOrScalar:
    if not isinstance(x, Jet2):
        return np.cosh(_as_scalar(x))
    s, c = np.sinh(x.value), np.cosh(x.value)
    return x.compose(c, s, c)


def arcsin(x: JetOrScalar) -> JetOrScalar:
    if not isinstance(x, Jet2):
        return np.arcsin(_as_scalar(x))
    v = x.value
    w = 1.0 - v * v
    return x.compose(np.arcsin(v), 1.0 / np.sqrt(w), v / (w * np.sqrt(w)))


def value_of(x: JetOrScalar) -> Scalar:
    return x.value if isinstance(x, Jet2) else _as_scalar(x)


__all__ = [
    "Jet2",
    "JetOrScalar",
    "Scalar",
    "arcsin",
    "cos",
    "cosh",
    "exp",
    "log",
    "power",
    "sin",
    "sinh",
    "sqrt",
    "tan",
    "value_of",
]
