from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Dict, Mapping, Tuple

from extkit.diffkit.models.jet import Scalar
from extkit.extension.models.ext_deriv_value import ExtDerivValue

Monomial = Tuple[int, int]


@dataclass(frozen=True)
class DerivationPolynomial:
    """Polynomial in G and X_L G with numeric coefficients.

    ``derive`` applies X_L through the closure rules D(G) = X_L G,
    D(X_L G) = -2 lam G, with lam = cL + c0 constant along X_L.
    """

    lam: Scalar
    terms: Mapping[Monomial, Scalar] = field(default_factory=dict)

    @classmethod
    def seed(cls, lam: Scalar) -> DerivationPolynomial:
        return cls(lam=lam, terms={(1, 0): 1.0})

    def _with(self, terms: Dict[Monomial, Scalar]) -> DerivationPolynomial:
        return DerivationPolynomial(
            lam=self.lam, terms={k: v for k, v in terms.items() if v != 0}
        )

    def __add__(self, other: DerivationPolynomial) -> DerivationPolynomial:
        terms = defaultdict(float, self.terms)
        for monomial, coefficient in other.terms.items():
            terms[monomial] += coefficient
        return self._with(terms)

    def __mul__(self, other: DerivationPolynomial) -> DerivationPolynomial:
        terms = defaultdict(float)
        for (i, j), a in self.terms.items():
            for (k, l), b in other.terms.items():
                terms[(i + k, j + l)] += a * b
        return self._with(terms)

    def scale(self, factor: Scalar) -> DerivationPolynomial:
        return self._with({k: v * factor for k, v in self.terms.items()})

    def derive(self) -> DerivationPolynomial:
        terms = defaultdict(float)
        for (i, j), coefficient in self.terms.items():
            if i:
                terms[(i - 1, j + 1)] += i * coefficient
            if j:
                terms[(i + 1, j - 1)] += -2.0 * self.lam * j * coefficient
        return self._with(terms)

    def evaluate(self, g: Scalar, xg: Scalar) -> Scalar:
        return sum(
            (c * g**i * xg**j for (i, j), c in self.terms.items()),
            start=0.0,
        )

    def pair(self, g: Scalar, xg: Scalar) -> ExtDerivValue:
        return ExtDerivValue(
            value=self.evaluate(g, xg), xl_derivative=self.derive().evaluate(g, xg)
        )
