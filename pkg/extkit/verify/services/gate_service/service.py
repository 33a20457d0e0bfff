import math
from typing import Optional, Sequence

from extkit.verify.schemas.report_schema import Gate
from extkit.verify.services.gate_service.signals import gate_evaluated


def _send(
    name: str,
    value: Optional[float],
    tol: float,
    passed: bool,
    where: Optional[Sequence[float]],
) -> Gate:
    gate = Gate(
        name=name,
        value=value,
        tol=tol,
        passed=passed,
        where=None if where is None else [float(v) for v in where],
    )
    gate_evaluated.send(name, gate=gate)
    return gate


def evaluate_gate(
    name: str,
    value: Optional[float],
    tol: float,
    where: Optional[Sequence[float]] = None,
) -> Gate:
    """A gate passes when ``value`` is finite and at most ``tol``."""
    passed = value is not None and math.isfinite(value) and value <= tol
    return _send(name, value, tol, passed, where)


def evaluate_floor(
    name: str,
    value: Optional[float],
    floor: float,
    where: Optional[Sequence[float]] = None,
) -> Gate:
    """Negative controls pass when ``value`` reaches ``floor``."""
    passed = value is not None and math.isfinite(value) and value >= floor
    return _send(name, value, floor, passed, where)
