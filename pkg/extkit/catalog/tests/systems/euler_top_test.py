import numpy as np

from extkit.poisson.services.bracket_service import service as bracket_service


def test_euler_top_ok__casimir_commutes(euler_top):
    casimir = euler_top.observables["M"]

    for m in np.random.default_rng(6).uniform(-1.0, 1.0, size=(50, 3)):
        assert abs(bracket_service.bracket(euler_top.structure, euler_top.hamiltonian, casimir, m)) <= 1e-12
        assert abs(bracket_service.apply_xl(euler_top, casimir, m)) <= 1e-12
        assert abs(bracket_service.apply_xl(euler_top, euler_top.hamiltonian, m)) <= 1e-12


def test_euler_top_ok__rigid_body_equations(euler_top):
    m = np.array([0.3, -0.7, 0.5])
    I1, I2, I3 = 1.0, 2.0, 3.0

    rate = bracket_service.ham_vector_field(euler_top, m)

    assert np.allclose(
        rate,
        [
            (1 / I3 - 1 / I2) * m[1] * m[2],
            (1 / I1 - 1 / I3) * m[2] * m[0],
            (1 / I2 - 1 / I1) * m[0] * m[1],
        ],
        rtol=1e-14,
        atol=1e-15,
    )
