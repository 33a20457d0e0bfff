import logging

from extkit.catalog.services.catalog_service.signals import gsolution_gated
from extkit.extension.models.g_solution import GSolution

logger = logging.getLogger(__name__)


@gsolution_gated.connect
def log_unverified_solution(sender, solution: GSolution):
    if solution.verified:
        logger.debug(
            "Served the G solution of %s with max residual %.3e",
            sender,
            solution.max_residual,
        )
        return
    logger.warning(
        "Serving the G solution of %s although it failed verification "
        "(max residual %.3e)",
        sender,
        solution.max_residual,
    )
