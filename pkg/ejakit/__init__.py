from loguru import logger

# silent when embedded; the eja command turns logging on
logger.disable("ejakit")

__version__ = "0.1.0"
