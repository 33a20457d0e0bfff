from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from typing import Callable, Sequence, Union

import numpy as np

from extkit.diffkit.models.jet import Jet2, JetOrScalar, Scalar

Rule = Callable[[Sequence[JetOrScalar]], JetOrScalar]
SingularPredicate = Callable[[np.ndarray, float], bool]


class Codomain(enum.Enum):
    real = "real"
    complex = "complex"


def never_singular(x: np.ndarray, margin: float = 0.0) -> bool:
    return False


def _either(first: SingularPredicate, second: SingularPredicate) -> SingularPredicate:
    if first is never_singular:
        return second
    if second is never_singular or second is first:
        return first

    def _predicate(x: np.ndarray, margin: float = 0.0) -> bool:
        return first(x, margin) or second(x, margin)

    return _predicate


def _widest(first: Codomain, second: Codomain) -> Codomain:
    if Codomain.complex in (first, second):
        return Codomain.complex
    return Codomain.real


@dataclass(frozen=True)
class ScalarField:
    """A scalar function of a phase point.

    ``rule`` receives the coordinates as a sequence whose items are either
    plain numbers or jets, so the same closure serves value evaluation and
    derivative propagation. ``singular`` tells whether a point lies within
    ``margin`` of the declared singular set.
    """

    dim: int
    rule: Rule
    codomain: Codomain = Codomain.real
    singular: SingularPredicate = never_singular
    name: str = ""

    @classmethod
    def constant(cls, value: Scalar, dim: int, name: str = "") -> ScalarField:
        codomain = Codomain.complex if np.iscomplexobj(value) else Codomain.real
        return cls(dim=dim, rule=lambda x: value, codomain=codomain, name=name)

    @classmethod
    def coordinate(cls, index: int, dim: int, name: str = "") -> ScalarField:
        return cls(dim=dim, rule=lambda x: x[index], name=name or f"x{index}")

    def __call__(self, x: Sequence[float]) -> Scalar:
        return self.rule(list(x))

    def is_singular(self, x: np.ndarray, margin: float = 0.0) -> bool:
        return bool(self.singular(x, margin))

    def named(self, name: str) -> ScalarField:
        return replace(self, name=name)

    def map(
        self,
        function: Callable[[JetOrScalar], JetOrScalar],
        codomain: Codomain | None = None,
        name: str = "",
    ) -> ScalarField:
        rule = self.rule
        return ScalarField(
            dim=self.dim,
            rule=lambda x: function(rule(x)),
            codomain=codomain or self.codomain,
            singular=self.singular,
            name=name,
        )

    def _combine(
        self,
        other: Union[ScalarField, Scalar],
        operation: Callable[[JetOrScalar, JetOrScalar], JetOrScalar],
    ) -> ScalarField:
        if not isinstance(other, ScalarField):
            other = ScalarField.constant(other, self.dim)
        if other.dim != self.dim:
            raise ValueError(
                f"Cannot combine fields of dimensions {self.dim} and {other.dim}"
            )
        left, right = self.rule, other.rule
        return ScalarField(
            dim=self.dim,
            rule=lambda x: operation(left(x), right(x)),
            codomain=_widest(self.codomain, other.codomain),
            singular=_either(self.singular, other.singular),
        )

    def __add__(self, other: Union[ScalarField, Scalar]) -> ScalarField:
        return self._combine(other, lambda a, b: a + b)

    def __radd__(self, other: Scalar) -> ScalarField:
        return self._combine(other, lambda a, b: b + a)

    def __sub__(self, other: Union[ScalarField, Scalar]) -> ScalarField:
        return self._combine(other, lambda a, b: a - b)

    def __rsub__(self, other: Scalar) -> ScalarField:
        return self._combine(other, lambda a, b: b - a)

    def __mul__(self, other: Union[ScalarField, Scalar]) -> ScalarField:
        return self._combine(other, lambda a, b: a * b)

    def __rmul__(self, other: Scalar) -> ScalarField:
        return self._combine(other, lambda a, b: b * a)

    def __truediv__(self, other: Union[ScalarField, Scalar]) -> ScalarField:
        return self._combine(other, lambda a, b: a / b)

    def __neg__(self) -> ScalarField:
        return self.map(lambda a: -a, name=f"-{self.name}" if self.name else "")

    def __pow__(self, exponent: int) -> ScalarField:
        return self.map(lambda a: a**exponent)


def lift(value: JetOrScalar, dim: int, order: int = 2) -> Jet2:
    """Promote a rule result that does not depend on the point to a jet."""
    if isinstance(value, Jet2):
        return value
    return Jet2.constant(value, dim, order)


def embed(field: ScalarField, dim: int, offset: int) -> ScalarField:
    """View ``field`` as a field of ``dim`` coordinates, reading its own from ``offset``."""
    rule, singular = field.rule, field.singular
    end = offset + field.dim
    return ScalarField(
        dim=dim,
        rule=lambda x: rule(x[offset:end]),
        codomain=field.codomain,
        singular=(
            never_singular
            if singular is never_singular
            else lambda x, margin=0.0: singular(x[offset:end], margin)
        ),
        name=field.name,
    )
