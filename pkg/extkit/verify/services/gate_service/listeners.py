import logging

from extkit.verify.schemas.report_schema import Gate
from extkit.verify.services.gate_service.signals import gate_evaluated

logger = logging.getLogger(__name__)


@gate_evaluated.connect
def log_failed_gate(sender, gate: Gate):
    if gate.passed:
        logger.debug(
            "Gate %s passed with %s against %s", gate.name, gate.value, gate.tol
        )
        return
    logger.warning(
        "Gate %s failed with %s against %s at %s",
        gate.name,
        gate.value,
        gate.tol,
        gate.where,
    )
