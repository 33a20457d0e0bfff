from unittest.mock import patch

import numpy as np
import pytest
from pydantic import ValidationError

import extkit.catalog.services.catalog_service.listeners as catalog_listeners
from extkit.catalog.schemas.entry_schema import Quartic1Params
from extkit.catalog.services.catalog_service.service import (
    instantiate,
    list_entries,
    show,
)
from extkit.diffkit.services.jet_service._utils import evaluate_value
from extkit.extension.models.g_solution import GlobalFlag
from extkit.shared.exceptions import ServiceValidationError


def test_list_entries_ok():
    entries = list_entries()

    assert [entry.id for entry in entries] == [
        "quartic1",
        "quartic2a",
        "quartic2b",
        "square_polar",
        "vortex_equal",
        "vortex_opposite",
        "lotka_volterra",
        "euler_top",
    ]
    assert sum(entry.has_g for entry in entries) == 6

    notes = {entry.id: entry.notes for entry in entries}
    assert notes["vortex_equal"] == "conditionally-single-valued"
    assert notes["vortex_opposite"] == "globally defined"
    assert notes["lotka_volterra"].startswith("no-extension")
    assert notes["euler_top"].startswith("no-extension")


def test_list_entries_ok__include_reference():
    entries = list_entries(include_reference=True)

    assert len(entries) == 9
    assert entries[-1].id == "harmonic_oscillator"
    assert entries[-1].has_g


def test_show_ok():
    details = show(entry_id="quartic1")

    assert details.id == "quartic1"
    assert details.coordinates == ["q", "p"]
    assert details.intervals == [[-2.0, 2.0], [-2.0, 2.0]]

    parameters = {parameter.name: parameter for parameter in details.parameters}
    assert list(parameters) == ["C1", "C2", "C3", "c", "c0", "f"]
    assert parameters["C1"].default == 1.0
    assert parameters["C1"].type == "float"
    assert parameters["f"].description == "f(q)"
    assert parameters["f"].default["coefficients"] == [0.0]


def test_show_failure__unknown_entry():
    with pytest.raises(ServiceValidationError) as ctx:
        show(entry_id="three_body")

    assert ctx.value.args[0] == "Unknown catalog entry three_body"


def test_instantiate_ok__quartic1_example():
    system, solutions = instantiate(
        entry_id="quartic1",
        params={"C1": 1.0, "C2": 0.0, "C3": 0.0, "c": 1.0, "c0": 1.0},
    )

    assert system.dim == 2
    assert len(solutions) == 1
    solution = solutions[0]
    assert solution.verified is True
    assert solution.max_residual <= 1e-7
    assert (solution.c, solution.c0) == (1.0, 1.0)

    for q, p in [(1.0, 0.5), (-0.3, 1.7), (0.0, 0.0)]:
        expected = (16 * p * p + 2 * q * q) ** 2 / 256 - 1
        assert evaluate_value(system.hamiltonian, np.array([q, p])) == pytest.approx(
            expected, rel=1e-14, abs=1e-15
        )
        assert evaluate_value(solution.field, np.array([q, p])) == q


def test_instantiate_ok__params_as_schema():
    system, solutions = instantiate(
        entry_id="quartic1", params=Quartic1Params(C2=0.5, f={"coefficients": [0, 1]})
    )

    assert solutions[0].verified is True
    assert evaluate_value(solutions[0].field, np.array([2.0, 0.0])) == 2.5


@pytest.mark.parametrize(
    "entry_id",
    ["quartic1", "quartic2a", "square_polar", "vortex_equal", "vortex_opposite"],
)
def test_instantiate_ok__gate_passes(entry_id):
    _, solutions = instantiate(entry_id=entry_id)

    assert solutions[0].verified is True
    assert solutions[0].max_residual <= 1e-7


def test_instantiate_ok__vortex_flags():
    _, equal = instantiate(entry_id="vortex_equal")
    _, opposite = instantiate(entry_id="vortex_opposite")

    assert equal[0].global_flag == GlobalFlag.conditionally_single_valued
    assert equal[0].field.codomain.value == "complex"
    assert opposite[0].global_flag == GlobalFlag.globally_defined


def test_instantiate_ok__quartic2b_is_reported():
    _, solutions = instantiate(entry_id="quartic2b")

    solution = solutions[0]
    assert solution.verified is not None
    assert solution.max_residual is not None
    assert solution.verified == (solution.max_residual <= 1e-7)


@pytest.mark.parametrize("entry_id", ["lotka_volterra", "euler_top"])
def test_instantiate_ok__no_extension(entry_id):
    system, solutions = instantiate(entry_id=entry_id)

    assert solutions == []
    assert system.name == entry_id


def test_instantiate_ok__without_verification():
    _, solutions = instantiate(entry_id="quartic1", verify=False)

    assert solutions[0].verified is None
    assert solutions[0].max_residual is None


def test_instantiate_failure__printed_sign_fails_the_gate():
    with patch.object(catalog_listeners, "logger") as mocked_logger:
        with pytest.raises(ServiceValidationError) as ctx:
            instantiate(entry_id="square_polar", params={"printed_sign": True})

    assert ctx.value.args[0].startswith(
        "The G solution of square_polar failed the PDE gate with max residual"
    )
    mocked_logger.warning.assert_called_once()


def test_instantiate_failure__vanishing_solution():
    with pytest.raises(ServiceValidationError) as ctx:
        instantiate(
            entry_id="vortex_opposite",
            params={"F1": {"coefficients": [0.0]}, "F2": {"coefficients": [0.0]}},
        )

    assert ctx.value.args[0] == "The G solution vanishes identically"


def test_instantiate_failure__unknown_entry():
    with pytest.raises(ServiceValidationError) as ctx:
        instantiate(entry_id="three_body")

    assert ctx.value.args[0] == "Unknown catalog entry three_body"


@pytest.mark.parametrize(
    "entry_id, params, message",
    [
        ("quartic1", {"C1": 0.0}, "C1 cannot be zero"),
        ("quartic1", {"c": 0.0}, "c cannot be zero"),
        ("quartic1", {"f": {"imaginary": [1.0]}}, "f must be real-valued"),
        ("quartic2a", {"C1": 0.0}, "C1 cannot be zero"),
        ("square_polar", {"C3": 0.0}, "C3 cannot be zero"),
        ("euler_top", {"I1": -1.0}, "The moments of inertia must be positive"),
        ("euler_top", {"I1": 2.0}, "The moments of inertia must be distinct"),
        ("vortex_equal", {"k": 0.0}, "Input should be greater than 0"),
    ],
)
def test_instantiate_failure__constraint_violation(entry_id, params, message):
    with pytest.raises(ValidationError) as ctx:
        instantiate(entry_id=entry_id, params=params)

    assert ctx.value.errors()[0]["msg"] == message


def test_instantiate_failure__unknown_parameter():
    with pytest.raises(ValidationError) as ctx:
        instantiate(entry_id="lotka_volterra", params={"omega": 1.0})

    assert ctx.value.errors()[0]["type"] == "extra_forbidden"
