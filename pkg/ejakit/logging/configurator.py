import sys

from loguru import logger

from ejakit.env import EjaSettings, get_settings

_PACKAGE = "ejakit"


def configure_logging(settings: EjaSettings = None, level: str = None) -> None:
    """
    Route the package's log records to stderr.
    stdout is reserved for machine-readable output.
    :param settings: effective settings, loaded from the active profiles when omitted
    :param level: overrides the configured level
    """
    settings = settings or get_settings()
    logger.remove()
    logger.add(
        sys.stderr,
        level=level or settings.logging.level,
        format=settings.logging.format,
        filter=_PACKAGE,
    )
    logger.enable(_PACKAGE)
