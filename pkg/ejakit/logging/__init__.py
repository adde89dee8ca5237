from ejakit.logging.configurator import configure_logging

__all__ = [
    "configure_logging",
]
