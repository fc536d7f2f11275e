#!/usr/bin/env python3
from __future__ import annotations

from typing import Any, Dict

from ..errors import ConfigError
from ..modelparse import OUTPUT_FORMATS

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")
WINDOW_POLICIES = ("generator_sum",)


class SettingsValidator:
    """Checks section presence and value ranges of merged settings."""

    def validate(self, settings: Dict[str, Any]) -> None:
        self._validate_required_sections(settings)
        self._validate_engine(settings["engine"])
        self._validate_invariants(settings["invariants"])
        self._validate_output(settings["output"])
        self._validate_logging(settings["logging"])
        self._validate_builtins(settings["builtins"])

    def _validate_required_sections(self, settings: Dict[str, Any]) -> None:
        required = settings.get("settings_config", {}).get(
            "required_sections", ["engine", "invariants", "output", "cache", "logging", "builtins"]
        )
        for section in required:
            if section not in settings:
                raise ConfigError(f"settings missing required section: {section}")

    def _validate_engine(self, engine: Dict[str, Any]) -> None:
        policy = engine.get("window_policy")
        if policy not in WINDOW_POLICIES:
            raise ConfigError(f"unknown window_policy {policy!r}")
        for key in ("window_factor", "stability_step"):
            value = engine.get(key)
            if not isinstance(value, int) or value < 1:
                raise ConfigError(f"engine.{key} must be a positive integer, got {value!r}")
        margin = engine.get("weight_margin")
        if margin is not None and (not isinstance(margin, int) or margin < 1):
            raise ConfigError(f"engine.weight_margin must be >= 1 or null, got {margin!r}")
        if engine.get("lift_seed") not in ("symmetric", "identity", "solve"):
            raise ConfigError(f"unknown lift_seed {engine.get('lift_seed')!r}")

    def _validate_invariants(self, invariants: Dict[str, Any]) -> None:
        n, m_max = invariants.get("n"), invariants.get("m_max")
        if not isinstance(n, int) or n < 2:
            raise ConfigError(f"invariants.n must be an integer >= 2, got {n!r}")
        if not isinstance(m_max, int) or m_max < 0:
            raise ConfigError(f"invariants.m_max must be a non-negative integer, got {m_max!r}")

    def _validate_output(self, output: Dict[str, Any]) -> None:
        if output.get("format") not in OUTPUT_FORMATS:
            raise ConfigError(f"unknown output format {output.get('format')!r}")

    def _validate_logging(self, logging_section: Dict[str, Any]) -> None:
        level = str(logging_section.get("level", "")).upper()
        if level not in LOG_LEVELS:
            raise ConfigError(f"unknown log level {logging_section.get('level')!r}")

    def _validate_builtins(self, builtins: Dict[str, Any]) -> None:
        for name, entry in builtins.items():
            if not isinstance(entry, dict) or "spec" not in entry:
                raise ConfigError(f"built-in '{name}' missing spec")
            window = entry.get("window")
            if window is not None and (
                not isinstance(window, list) or len(window) != 2 or window[0] > window[1]
            ):
                raise ConfigError(f"built-in '{name}' has an invalid window {window!r}")
