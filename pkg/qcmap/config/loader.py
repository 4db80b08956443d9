"""Run configuration files for ``qcmap map --config``."""

import json
from pathlib import Path
from typing import Any, Dict, Mapping

import tomli
import yaml
from pydantic import ValidationError

from qcmap.errors import ConfigError
from qcmap.schemas.config_schema import RunConfig


def load_run_config(config_path: Path) -> Dict[str, Any]:
    """
    Load raw run settings from YAML, JSON or TOML.

    TOML files may keep the settings under ``[tool.qcmap]``.

    Args:
        config_path: Path to config file

    Returns:
        Mapping of RunConfig field names to values

    Raises:
        ConfigError: If the file is missing or its format is invalid
    """
    if not config_path.exists():
        raise ConfigError(f"Config file not found: {config_path}")

    suffix = config_path.suffix.lower()

    try:
        if suffix in ['.yml', '.yaml']:
            with open(config_path, 'r', encoding='utf-8') as f:
                data = yaml.safe_load(f)
        elif suffix == '.json':
            with open(config_path, 'r', encoding='utf-8') as f:
                data = json.load(f)
        elif suffix == '.toml':
            with open(config_path, 'rb') as f:
                data = tomli.load(f)
            data = data.get('tool', {}).get('qcmap', data)
        else:
            raise ConfigError(f"Unsupported config file format: {suffix}")
    except ConfigError:
        raise
    except Exception as e:
        raise ConfigError(f"Failed to load config: {e}")

    if data is None:
        return {}
    if not isinstance(data, dict):
        raise ConfigError(f"Config file must hold a mapping, got {type(data).__name__}")
    unknown = sorted(set(data) - set(RunConfig.model_fields))
    if unknown:
        raise ConfigError(f"Unknown config keys: {', '.join(unknown)}")
    return data


def build_run_config(file_values: Mapping[str, Any], overrides: Mapping[str, Any]) -> RunConfig:
    """
    Merge file values with command-line values; non-None overrides win.

    Raises:
        ConfigError: If the merged settings are invalid
    """
    merged = dict(file_values)
    merged.update({key: value for key, value in overrides.items() if value is not None})
    try:
        return RunConfig(**merged)
    except ValidationError as e:
        problems = "; ".join(
            f"{'.'.join(str(p) for p in err['loc']) or 'config'}: {err['msg']}" for err in e.errors()
        )
        raise ConfigError(f"Invalid run configuration: {problems}")
