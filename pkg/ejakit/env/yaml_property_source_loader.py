"""
Profile-aware YAML configuration.

application.yaml is read first; application-<profile>.yaml files are merged over
it in profile order. String values may reference ${NAME:default}: NAME is looked
up in the process environment, then as a dotted path in the merged tree.
"""
import os
import re
from importlib import resources
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

import yaml
from loguru import logger

from ejakit.env.environment import Environment

CONFIG_DIR_PROPERTY_NAME = "EJA_CONFIG_DIR"

_PLACEHOLDER = re.compile(r"\$\{([^}:]+)(?::([^}]*))?\}")

ConfigTree = Dict[str, Any]


def deep_merge(base: ConfigTree, overrides: ConfigTree) -> ConfigTree:
    """Nested dicts merge key by key; any other value in overrides replaces the base value."""
    merged = dict(base)
    for key, value in overrides.items():
        if isinstance(merged.get(key), dict) and isinstance(value, dict):
            merged[key] = deep_merge(merged[key], value)
        else:
            merged[key] = value
    return merged


def lookup(tree: ConfigTree, dotted: str) -> Optional[str]:
    node: Any = tree
    for key in dotted.split("."):
        if not isinstance(node, dict) or key not in node:
            return None
        node = node[key]
    return None if node is None else str(node)


def resolve_placeholders(tree: ConfigTree) -> ConfigTree:

    def substitute(match: re.Match) -> str:
        name, default = match.group(1), match.group(2)
        value = os.getenv(name)
        if value is None:
            value = lookup(tree, name)
        return value if value is not None else (default or "")

    def walk(value: Any) -> Any:
        if isinstance(value, str):
            return _PLACEHOLDER.sub(substitute, value)
        if isinstance(value, dict):
            return {k: walk(v) for k, v in value.items()}
        if isinstance(value, list):
            return [walk(v) for v in value]
        return value

    return walk(tree)


class SimpleYamlLoader:

    def __init__(self, config_dir: Union[str, Path] = None):
        self.config_dir = Path(config_dir) if config_dir else self.find_config_dir()
        assert self.config_dir.exists(), f"Config dir {self.config_dir} not exists, please check!"
        self.env = Environment()
        self._files: Dict[str, Optional[ConfigTree]] = {}

    @staticmethod
    def find_config_dir() -> Path:
        """EJA_CONFIG_DIR when set, else the configs shipped inside the package."""
        override = os.getenv(CONFIG_DIR_PROPERTY_NAME)
        if override:
            return Path(override)
        return Path(str(resources.files("ejakit").joinpath("resources", "configs")))

    def read(self, filename: str) -> Optional[ConfigTree]:
        """Parsed file contents; missing or unreadable files yield None and are remembered."""
        if filename not in self._files:
            path = self.config_dir / filename
            tree = None
            if path.exists():
                try:
                    tree = yaml.safe_load(path.read_text(encoding="utf-8"))
                except (OSError, yaml.YAMLError) as e:
                    logger.error("Failed to load config file {}: {}", filename, e)
            self._files[filename] = tree if isinstance(tree, dict) else None
        return self._files[filename]

    def read_first(self, *filenames: str) -> Optional[ConfigTree]:
        return next((tree for tree in map(self.read, filenames) if tree), None)

    def load(self, profiles: List[str] = None) -> ConfigTree:
        if not profiles:
            profiles = self.env.get_active_profiles()
        logger.debug("Loading configuration from {} for profiles {}", self.config_dir, profiles)
        merged = self.read_first("application.yml", "application.yaml") or {}
        for profile in profiles:
            overrides = self.read_first(f"application-{profile}.yml", f"application-{profile}.yaml")
            if overrides:
                merged = deep_merge(merged, overrides)
        return resolve_placeholders(merged)
