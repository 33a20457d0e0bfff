import logging
from typing import Annotated, Optional

import typer

from extkit.catalog.cli import app as catalog_cli
from extkit.extension.cli import app as extension_cli
from extkit.settings import get_settings, log_level_name
from extkit.verify.cli import app as verify_cli

logger = logging.getLogger(__name__)

app = typer.Typer(no_args_is_help=True)

# The domain apps share one flat command namespace
for domain_cli in (catalog_cli, extension_cli, verify_cli):
    app.registered_commands.extend(domain_cli.registered_commands)


def _log_level(value: Optional[str]) -> Optional[str]:
    if value is None:
        return None
    try:
        return log_level_name(value)
    except ValueError as e:
        raise typer.BadParameter(str(e))


@app.callback()
def main(
    log_level: Annotated[
        Optional[str],
        typer.Option("--log-level", help="Overrides LOG_LEVEL", callback=_log_level),
    ] = None,
):
    """Extended Hamiltonians and their numerical verification."""
    level = log_level or get_settings().LOG_LEVEL
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")
    logger.debug("Logging at %s", level)


if __name__ == "__main__":
    app()
