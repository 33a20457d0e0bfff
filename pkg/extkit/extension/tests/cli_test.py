import json
import math

from typer.testing import CliRunner

from extkit.cli import app

runner = CliRunner()


def _invoke(*args: str, **kwargs):
    return runner.invoke(app, list(args), **kwargs)


def _config(tmp_path, data: dict) -> str:
    path = tmp_path / "config.json"
    path.write_text(json.dumps(data))
    return str(path)


def test_gn_compare_ok():
    result = _invoke("gn-compare", "--n-max", "8", "--samples", "200", "--seed", "7")

    assert result.exit_code == 0
    report = json.loads(result.stdout)
    assert report["command"] == "gn-compare"
    assert report["metrics"]["max_rel_err"] <= 1e-10
    assert report["metrics"]["n_max"] == 8
    assert report["metrics"]["samples"] == 200
    assert report["gates"][0]["name"] == "gn-compare"
    assert report["gates"][0]["pass"] is True
    assert report["skipped_points"] == 0


def test_gn_compare_ok__byte_identical_reruns():
    first = _invoke("gn-compare", "--samples", "50", "--seed", "3")
    second = _invoke("gn-compare", "--samples", "50", "--seed", "3")

    assert first.exit_code == second.exit_code == 0
    assert first.stdout == second.stdout


def test_gn_compare_ok__seed_precedence(tmp_path, monkeypatch, subtests):
    config = _config(tmp_path, {"sampling": {"count": 10, "seed": 5}})

    def _seed(*args):
        result = _invoke("gn-compare", "--config", config, *args)
        assert result.exit_code == 0
        return json.loads(result.stdout)["config_echo"]["sampling"]["seed"]

    with subtests.test("file"):
        monkeypatch.delenv("EXTKIT_SEED", raising=False)
        assert _seed() == 5

    with subtests.test("environment over file"):
        monkeypatch.setenv("EXTKIT_SEED", "7")
        assert _seed() == 7

    with subtests.test("flag over environment"):
        monkeypatch.setenv("EXTKIT_SEED", "7")
        assert _seed("--seed", "3") == 3


def test_gn_compare_failure__unknown_config_key(tmp_path):
    config = _config(tmp_path, {"sampling": {"count": 10}, "colour": "blue"})

    result = _invoke("gn-compare", "--config", config)

    assert result.exit_code == 2
    assert "Invalid configuration" in result.output


def test_gn_compare_failure__unreadable_config(tmp_path):
    path = tmp_path / "config.json"
    path.write_text("{not json")

    result = _invoke("gn-compare", "--config", str(path))

    assert result.exit_code == 2
    assert "is not valid JSON" in result.output


def test_extend_ok__quartic1(tmp_path):
    config = _config(
        tmp_path,
        {"system": "quartic1", "state": [math.pi / 2, 0.3, 0.5, 0.4]},
    )

    result = _invoke("extend", "--config", config)

    assert result.exit_code == 0
    metrics = json.loads(result.stdout)["metrics"]
    assert metrics["indices"] == [1, 1]
    assert metrics["state"] == [math.pi / 2, 0.3, 0.5, 0.4]
    assert metrics["max_bracket"] <= 1e-5
    assert metrics["checked"] == 10


def test_extend_failure__state_dimension(tmp_path):
    config = _config(tmp_path, {"system": "quartic1", "state": [1.0, 0.3, 0.5]})

    result = _invoke("extend", "--config", config)

    assert result.exit_code == 2
    assert "State dimension 3 does not match dimension 4" in result.output


def test_extend_failure__no_g_solution():
    result = _invoke("extend", "--system", "lotka_volterra")

    assert result.exit_code == 2
    assert "lotka_volterra: entry has no G solution" in result.output


def test_extend_failure__no_system():
    result = _invoke("extend")

    assert result.exit_code == 2
    assert "No system given" in result.output
