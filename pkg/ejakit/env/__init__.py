from ejakit.env.environment import Environment
from ejakit.env.settings import (
    EjaSettings,
    LoggingSettings,
    Output,
    Sampling,
    Tolerances,
    bind,
    default_tolerance,
    get_settings,
    reset_settings,
)
from ejakit.env.yaml_property_source_loader import SimpleYamlLoader

__all__ = [
    "Environment",
    "SimpleYamlLoader",
    "EjaSettings",
    "Tolerances",
    "Sampling",
    "LoggingSettings",
    "Output",
    "bind",
    "default_tolerance",
    "get_settings",
    "reset_settings",
]
