import math

import pytest
from pydantic import ValidationError

from extkit.catalog.schemas.function_schema import FunctionKind, FunctionSpec, constant
from extkit.diffkit.models.jet import Jet2


def test_function_spec_ok__polynomial():
    function = FunctionSpec(coefficients=[1.0, -2.0, 0.5]).build()

    assert function(2.0) == pytest.approx(1.0 - 4.0 + 2.0)
    assert constant(3.0).build()(10.0) == 3.0


def test_function_spec_ok__complex_polynomial():
    spec = FunctionSpec(coefficients=[1.0], imaginary=[0.0, 2.0])

    assert not spec.is_real
    assert spec.build()(0.5) == pytest.approx(1.0 + 1.0j)


def test_function_spec_ok__trigonometric(subtests):
    for kind, trig in ((FunctionKind.sin, math.sin), (FunctionKind.cos, math.cos)):
        with subtests.test(msg=kind.value):
            spec = FunctionSpec(kind=kind, amplitude=2.0, frequency=3.0, phase=0.1)

            assert spec.build()(0.4) == pytest.approx(2.0 * trig(1.3))


def test_function_spec_ok__propagates_jets():
    function = FunctionSpec(coefficients=[0.0, 0.0, 1.0]).build()

    jet = function(Jet2.variable(3.0, 0, 1))

    assert jet.value == 9.0
    assert jet.gradient[0] == 6.0
    assert jet.hessian[0, 0] == 2.0


@pytest.mark.parametrize(
    "payload, message",
    [
        ({"coefficients": []}, "A polynomial needs at least one coefficient"),
        ({"kind": "sin", "imaginary": [1.0]}, "Only polynomials take imaginary coefficients"),
    ],
)
def test_function_spec_failure(payload, message):
    with pytest.raises(ValidationError) as ctx:
        FunctionSpec.model_validate(payload)

    assert ctx.value.errors()[0]["msg"] == message
