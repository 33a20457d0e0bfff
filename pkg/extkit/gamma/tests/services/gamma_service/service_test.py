import math

import numpy as np
import pytest

from extkit.gamma.schemas.gamma_schema import GammaParams
from extkit.gamma.services.gamma_service import service
from extkit.shared.exceptions import PoleError, ServiceValidationError


def test_tagged_trig_ok__linear():
    assert service.tagged_trig(kappa=0.0, x=1.7) == (1.7, 1.0, 1.7)


def test_tagged_trig_ok__hyperbolic():
    s, c, t = service.tagged_trig(kappa=-4.0, x=0.3)

    assert s == pytest.approx(math.sinh(0.6) / 2, rel=1e-15)
    assert c == pytest.approx(math.cosh(0.6), rel=1e-15)
    assert t == pytest.approx(math.tanh(0.6) / 2, rel=1e-15)


def test_tagged_trig_ok__pythagorean_identity(subtests):
    for kappa in (2.5, 0.0, -3.0):
        with subtests.test(msg=f"kappa={kappa}"):
            for x in np.linspace(-1.0, 1.0, 41):
                s, c, _ = service.tagged_trig(kappa=kappa, x=x)
                assert abs(c * c + kappa * s * s - 1.0) <= 1e-12


def test_tagged_trig_failure__tangent_pole():
    with pytest.raises(PoleError) as ctx:
        service.tagged_trig(kappa=1.0, x=math.pi / 2)

    assert ctx.value.args[0] == f"The tagged tangent has a pole at x={math.pi / 2!r}"


def test_tagged_trig_failure__non_finite_argument():
    with pytest.raises(ServiceValidationError) as ctx:
        service.tagged_trig(kappa=1.0, x=float("nan"))

    assert ctx.value.args[0] == "The argument must be finite"


@pytest.mark.parametrize(
    "c,C,u,expected",
    [
        (0.0, 2.0, 3.0, (-6.0, -2.0, 0.0)),
        (1.0, 0.0, 2.0, (0.5, -0.25, 0.25)),
        (1.0, 1.0, math.pi / 4, (1.0, -2.0, 4.0)),
    ],
)
def test_gamma_eval_ok__closed_form(c, C, u, expected):
    values = service.gamma_eval(params=GammaParams(c=c, C=C), u=u)

    np.testing.assert_allclose(values, expected, rtol=1e-12, atol=1e-15)


@pytest.mark.parametrize(
    "c,C,low,high",
    [
        (0.0, 1.0, -5.0, 5.0),
        (1.0, 0.0, 0.1, 10.0),
        (1.0, 1.0, 0.1, 3.0),
        (1.0, -1.0, 0.1, 10.0),
        (-1.0, 1.0, 0.1, 3.0),
        (2.0, 3.0, 0.05, 1.2),
    ],
)
def test_gamma_eval_ok__solves_riccati_equation(c, C, low, high):
    params = GammaParams(c=c, C=C)
    worst = 0.0
    for u in np.linspace(low, high, 1000):
        gamma, gamma_prime, _ = service.gamma_eval(params=params, u=u)
        scale = max(1.0, abs(gamma_prime), abs(c * gamma * gamma), abs(C))
        worst = max(worst, abs(gamma_prime + c * gamma * gamma + C) / scale)

    assert worst <= 1e-12


@pytest.mark.parametrize("c,C", [(1.0, 1.0), (1.0, -1.0), (2.0, 3.0), (0.0, 1.5)])
def test_gamma_eval_ok__second_derivative_matches_differences(c, C):
    params = GammaParams(c=c, C=C)
    h = 1e-5
    for u in (0.3, 0.7, 1.1):
        _, _, second = service.gamma_eval(params=params, u=u)
        _, ahead, _ = service.gamma_eval(params=params, u=u + h)
        _, behind, _ = service.gamma_eval(params=params, u=u - h)

        assert (ahead - behind) / (2 * h) == pytest.approx(second, rel=1e-6, abs=1e-9)


def test_gamma_eval_ok__offset_translates():
    shifted = service.gamma_eval(params=GammaParams(c=1.0, C=1.0, u_offset=0.5), u=1.0)
    plain = service.gamma_eval(params=GammaParams(c=1.0, C=1.0), u=0.5)

    assert shifted == pytest.approx(plain, rel=1e-15)


def test_gamma_eval_failure__pole():
    with pytest.raises(PoleError) as ctx:
        service.gamma_eval(params=GammaParams(c=1.0, C=0.0), u=0.0)

    assert ctx.value.args[0] == "gamma has a pole at u=0.0"
