#!/usr/bin/env python3
from __future__ import annotations

import hashlib
import json
import os
import tempfile
from pathlib import Path
from typing import Any, Dict, List, Optional

from ..modelparse import canonical_json
from ..utils.logging_config import get_logger

logger = get_logger("gorext.cli.cache")

SUFFIX = ".json"


def cache_key(material: Dict[str, Any]) -> str:
    """sha256 of the canonical JSON of the inputs that determine a report."""
    return hashlib.sha256(canonical_json(material).encode("utf-8")).hexdigest()


class ResultCache:
    """Content-addressed report store: one ``<key>.json`` file per computation.

    Each file holds the key material next to the report data; entries whose
    content does not parse or does not match their key are dropped.
    """

    def __init__(self, directory: str):
        self.directory = Path(os.path.expanduser(directory))

    def _path(self, key: str) -> Path:
        return self.directory / f"{key}{SUFFIX}"

    def get(self, material: Dict[str, Any]) -> Optional[Dict[str, Any]]:
        key = cache_key(material)
        path = self._path(key)
        if not path.exists():
            logger.debug("Cache miss", key=key)
            return None
        try:
            entry = json.loads(path.read_text(encoding="utf-8"))
            if not isinstance(entry, dict) or entry.get("material") != material:
                raise ValueError("entry does not match its key")
            report = entry["report"]
            if not isinstance(report, dict):
                raise ValueError("report is not a mapping")
        except (OSError, ValueError, KeyError) as e:
            logger.warning("Ignoring unreadable cache entry", path=str(path), reason=str(e))
            self._discard(path)
            return None
        logger.debug("Cache hit", key=key)
        return report

    def put(self, material: Dict[str, Any], report: Dict[str, Any]) -> Path:
        """Write an entry atomically (temporary file, then rename)."""
        self.directory.mkdir(parents=True, exist_ok=True)
        path = self._path(cache_key(material))
        payload = canonical_json({"material": material, "report": report})
        fd, tmp = tempfile.mkstemp(dir=self.directory, prefix=".tmp-", suffix=SUFFIX)
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as f:
                f.write(payload)
            os.replace(tmp, path)
        except BaseException:
            self._discard(Path(tmp))
            raise
        return path

    def entries(self) -> List[Dict[str, Any]]:
        if not self.directory.is_dir():
            return []
        rows = []
        for path in sorted(self.directory.glob(f"*{SUFFIX}")):
            if path.name.startswith(".tmp-"):
                continue
            row: Dict[str, Any] = {"key": path.stem, "bytes": path.stat().st_size}
            try:
                material = json.loads(path.read_text(encoding="utf-8"))["material"]
                row["command"] = material.get("command")
                row["window"] = material.get("window")
            except (OSError, ValueError, KeyError, TypeError, AttributeError):
                row["command"] = "unreadable"
            rows.append(row)
        return rows

    def purge(self) -> int:
        removed = 0
        if not self.directory.is_dir():
            return removed
        for path in self.directory.glob(f"*{SUFFIX}"):
            self._discard(path)
            removed += 1
        return removed

    @staticmethod
    def _discard(path: Path) -> None:
        try:
            path.unlink()
        except FileNotFoundError:
            pass
