"""Typed view of the merged YAML configuration."""
from functools import lru_cache
from pathlib import Path
from typing import Optional, Tuple, Type, TypeVar, Union

from commons_lang import object_utils
from pydantic import BaseModel, ConfigDict, Field

from ejakit.env.environment import Environment
from ejakit.env.yaml_property_source_loader import SimpleYamlLoader

M = TypeVar("M", bound=BaseModel)


class Tolerances(BaseModel):
    model_config = ConfigDict(frozen=True)

    eig: float = Field(1e-8, gt=0)
    idempotent: float = Field(1e-8, gt=0)
    positivity: float = Field(1e-8, gt=0)
    cluster: float = Field(1e-8, gt=0)
    law: float = Field(1e-7, gt=0)


class Sampling(BaseModel):
    model_config = ConfigDict(frozen=True)

    positivity_samples: int = Field(500, ge=1)
    diamond_random_ceilings: int = Field(50, ge=0)
    refine_max_retries: int = Field(8, ge=1)
    iso_trials: int = Field(50, ge=1)


class LoggingSettings(BaseModel):
    model_config = ConfigDict(frozen=True)

    level: str = "WARNING"
    format: str = "<green>{time:HH:mm:ss.SSS}</green> | <level>{level: <8}</level> | {name}:{function} - {message}"


class Output(BaseModel):
    model_config = ConfigDict(frozen=True)

    float_digits: int = Field(17, ge=1, le=17)


class EjaSettings(BaseModel):
    model_config = ConfigDict(frozen=True)

    tolerances: Tolerances = Tolerances()
    sampling: Sampling = Sampling()
    logging: LoggingSettings = LoggingSettings()
    output: Output = Output()


def bind(config: dict, property_path: str, model: Type[M]) -> M:
    """
    Validate the section found at a dotted path into a pydantic model.
    Missing sections yield the model defaults.
    """
    prop = object_utils.get(config, property_path)
    if not prop:
        return model()
    return model.model_validate(prop)


@lru_cache(maxsize=8)
def _load(profiles: Tuple[str, ...], config_dir: Optional[str]) -> EjaSettings:
    loader = SimpleYamlLoader(config_dir)
    config = loader.load(list(profiles))
    return bind(config, "eja", EjaSettings)


def get_settings(profiles: list[str] = None, config_dir: Union[str, Path] = None) -> EjaSettings:
    if not profiles:
        profiles = Environment.get_active_profiles()
    return _load(tuple(profiles), str(config_dir) if config_dir else None)


def reset_settings() -> None:
    _load.cache_clear()


def default_tolerance(name: str, value: Optional[float] = None) -> float:
    """An explicit tolerance wins; otherwise the configured eja.tolerances entry."""
    if value is not None:
        return value
    return getattr(get_settings().tolerances, name)
