import numpy as np
import pytest

from extkit.diffkit.models import jet as jets
from extkit.diffkit.models.scalar_field import Codomain, ScalarField
from extkit.diffkit.services.jet_service import service
from extkit.shared.exceptions import (
    DimensionMismatchError,
    NonFiniteResultError,
    SingularPointError,
)


def _central_gradient(field, x, h=1e-5):
    gradient = []
    for i in range(len(x)):
        step = np.zeros(len(x))
        step[i] = h
        gradient.append((field(x + step) - field(x - step)) / (2 * h))
    return np.array(gradient)


def _central_hessian(field, x, h=1e-4):
    n = len(x)
    hessian = np.zeros((n, n), dtype=complex if field.codomain == Codomain.complex else float)
    for i in range(n):
        for j in range(n):
            ei, ej = np.eye(n)[i] * h, np.eye(n)[j] * h
            hessian[i, j] = (
                field(x + ei + ej) - field(x + ei - ej) - field(x - ei + ej) + field(x - ei - ej)
            ) / (4 * h * h)
    return hessian


def test_eval_jet2_ok__polynomial():
    field = ScalarField(dim=1, rule=lambda x: x[0] ** 2)

    jet = service.eval_jet2(field=field, x=[3.0])

    assert jet.value == 9.0
    assert jet.gradient.tolist() == [6.0]
    assert jet.hessian.tolist() == [[2.0]]


def test_eval_jet2_ok__constant():
    field = ScalarField.constant(5.0, dim=3)

    jet = service.eval_jet2(field=field, x=[0.1, 0.2, 0.3])

    assert jet.value == 5.0
    assert not jet.gradient.any()
    assert not jet.hessian.any()


def test_eval_jet2_ok__exponential_of_product():
    field = ScalarField(dim=2, rule=lambda x: jets.exp(x[0] * x[1]))
    e2 = np.exp(2.0)

    jet = service.eval_jet2(field=field, x=[1.0, 2.0])

    assert jet.value == pytest.approx(e2, rel=1e-15)
    np.testing.assert_allclose(jet.gradient, [2 * e2, e2], rtol=1e-15)
    np.testing.assert_allclose(jet.hessian, [[4 * e2, 3 * e2], [3 * e2, e2]], rtol=1e-15)

    x = np.array([1.0, 2.0])
    np.testing.assert_allclose(jet.gradient, _central_gradient(field, x), rtol=1e-6)
    np.testing.assert_allclose(jet.hessian, _central_hessian(field, x), rtol=1e-4)


def test_eval_jet2_ok__leibniz_rule_on_random_polynomials():
    rng = np.random.default_rng(11)
    for _ in range(20):
        a, b = rng.normal(size=(2, 3))
        f = ScalarField(dim=2, rule=lambda x, a=a: a[0] * x[0] ** 3 + a[1] * x[0] * x[1] + a[2])
        g = ScalarField(dim=2, rule=lambda x, b=b: b[0] * x[1] ** 2 + b[1] * x[0] + b[2] * x[1])
        x = rng.uniform(-2, 2, size=2)

        jf = service.eval_jet2(field=f, x=x)
        jg = service.eval_jet2(field=g, x=x)
        jfg = service.eval_jet2(field=f * g, x=x)

        cross = np.outer(jf.gradient, jg.gradient)
        expected_hessian = jf.hessian * jg.value + jf.value * jg.hessian + cross + cross.T
        assert jfg.value == pytest.approx(jf.value * jg.value, rel=1e-12)
        np.testing.assert_allclose(
            jfg.gradient, jf.gradient * jg.value + jf.value * jg.gradient, rtol=1e-12, atol=1e-13
        )
        np.testing.assert_allclose(jfg.hessian, expected_hessian, rtol=1e-12, atol=1e-12)


def test_eval_jet2_ok__complex_codomain():
    field = ScalarField(
        dim=2,
        rule=lambda x: jets.exp(1j * x[0]) * x[1],
        codomain=Codomain.complex,
    )
    x = np.array([0.7, 1.3])

    jet = service.eval_jet2(field=field, x=x)

    assert jet.gradient.dtype == complex
    assert jet.value == pytest.approx(np.exp(0.7j) * 1.3)
    np.testing.assert_allclose(jet.gradient, _central_gradient(field, x), rtol=1e-6)
    np.testing.assert_allclose(jet.hessian, _central_hessian(field, x), rtol=1e-4, atol=1e-6)


def test_eval_jet2_failure_dimension_mismatch():
    field = ScalarField(dim=2, rule=lambda x: x[0] + x[1])

    with pytest.raises(DimensionMismatchError) as ctx:
        service.eval_jet2(field=field, x=[1.0, 2.0, 3.0])

    assert ctx.value.args[0] == "Point dimension 3 does not match field dimension 2"


def test_eval_jet2_failure_singular_point():
    field = ScalarField(
        dim=1,
        rule=lambda x: 1 / x[0],
        singular=lambda x, margin=0.0: abs(x[0]) <= margin,
    )

    with pytest.raises(SingularPointError) as ctx:
        service.eval_jet2(field=field, x=[0.0])

    assert ctx.value.args[0] == "The point lies in the singular set of the field"


def test_eval_jet2_failure_non_finite():
    field = ScalarField(dim=1, rule=lambda x: jets.log(x[0]), name="log")

    with pytest.raises(NonFiniteResultError) as ctx:
        service.eval_jet2(field=field, x=[0.0])

    assert ctx.value.args[0] == "Evaluation of field log is not finite"


def test_eval_value_and_first_order_jet():
    field = ScalarField(dim=2, rule=lambda x: x[0] * jets.sin(x[1]))

    value = service.eval_value(field=field, x=[2.0, 0.5])
    jet = service.eval_jet1(field=field, x=[2.0, 0.5])

    assert value == pytest.approx(2 * np.sin(0.5))
    assert jet.hessian is None
    np.testing.assert_allclose(jet.gradient, [np.sin(0.5), 2 * np.cos(0.5)])
