import math

import numpy as np
import pytest

from extkit.extension.models.extended_state import ExtendedState
from extkit.shared.exceptions import ServiceValidationError


def test_extended_state_ok__array_layout():
    state = ExtendedState.from_array([0.5, -1.0, 2.0, 3.0])

    assert state.u == 0.5
    assert state.p_u == -1.0
    assert np.array_equal(state.base, [2.0, 3.0])
    assert state.dim == 4
    assert np.array_equal(state.as_array(), [0.5, -1.0, 2.0, 3.0])


def test_extended_state_failure__not_finite():
    with pytest.raises(ServiceValidationError) as ctx:
        ExtendedState(u=math.inf, p_u=0.0, base=[1.0])

    assert ctx.value.args[0] == "Extended state coordinates must be finite"
