#!/usr/bin/env python3
from __future__ import annotations

import importlib.resources
import os
from pathlib import Path
from typing import Any, Dict, Optional

import yaml

from ..errors import ConfigError
from ..utils.logging_config import get_logger

CONFIG_ENV = "GOREXT_CONFIG"
CACHE_ENV = "GOREXT_CACHE_DIR"
DEFAULT_MAIN = str(Path(__file__).resolve().parent.parent / "config" / "main.yaml")

logger = get_logger("gorext.settings.loaders")


class SettingsLoader:
    """Loads the main settings file and deep-merges its includes.

    Files are looked up next to the main file first and then in the
    installed ``gorext/config`` package data.
    """

    def __init__(self, settings_path: Optional[str] = None):
        self.settings_path = settings_path or os.getenv(CONFIG_ENV) or DEFAULT_MAIN
        self.settings_dir = Path(self.settings_path).parent

    def load(self) -> Dict[str, Any]:
        main = self._load_yaml_file(self.settings_path)
        merged = self._merge_includes(main)
        self._apply_environment(merged)
        logger.debug("Settings loaded", path=self.settings_path, sections=sorted(merged))
        return merged

    def _load_yaml_file(self, file_path: str) -> Dict[str, Any]:
        if os.path.exists(file_path):
            with open(file_path, "r", encoding="utf-8") as f:
                return self._parsed(yaml.safe_load(f), file_path)
        try:
            resource = importlib.resources.files("gorext").joinpath("config", Path(file_path).name)
            with resource.open("r", encoding="utf-8") as f:
                return self._parsed(yaml.safe_load(f), file_path)
        except (FileNotFoundError, ModuleNotFoundError):
            pass
        raise ConfigError(f"settings file not found: {file_path}")

    @staticmethod
    def _parsed(data: Any, file_path: str) -> Dict[str, Any]:
        if data is None:
            return {}
        if not isinstance(data, dict):
            raise ConfigError(f"settings file {file_path} must contain a mapping")
        return data

    def _merge_includes(self, main: Dict[str, Any]) -> Dict[str, Any]:
        merged = {k: v for k, v in main.items() if k != "includes"}
        for include in main.get("includes", []):
            local = self.settings_dir / include
            path = str(local) if local.exists() else include
            merged = self._deep_merge(merged, self._load_yaml_file(path))
        return merged

    def _deep_merge(self, base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
        result = base.copy()
        for key, value in override.items():
            if key in result and isinstance(result[key], dict) and isinstance(value, dict):
                result[key] = self._deep_merge(result[key], value)
            else:
                result[key] = value
        return result

    @staticmethod
    def _apply_environment(settings: Dict[str, Any]) -> None:
        cache = settings.setdefault("cache", {})
        env_var = cache.get("env_var", CACHE_ENV)
        if os.getenv(env_var):
            cache["directory"] = os.environ[env_var]
