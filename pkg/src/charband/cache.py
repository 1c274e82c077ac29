"""Content-addressed on-disk cache for serialized coefficient families.

Each record is a text file named by the hash of (label, parameters, engine
version).  Its first line carries the hash of the payload, so a damaged record
is detected, reported and recomputed.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
import tempfile
from pathlib import Path
from typing import Callable

# bump whenever a sign convention or normalization changes
ENGINE_VERSION = "charband-1;adams=signed;degrees=normalized"

log = logging.getLogger(__name__)


def default_dir() -> Path:
    env = os.environ.get("CHARBAND_CACHE")
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return Path(base) / "charband"


def record_key(label: str, params: dict) -> str:
    blob = json.dumps({"label": label, "params": params, "engine": ENGINE_VERSION}, sort_keys=True)
    return hashlib.sha256(blob.encode()).hexdigest()


def _digest(payload: str) -> str:
    return hashlib.sha256(payload.encode()).hexdigest()


class Cache:
    def __init__(self, directory: Path | str | None = None, enabled: bool = True):
        self.directory = Path(directory) if directory is not None else default_dir()
        self.enabled = enabled
        self.warnings: list[str] = []

    def path(self, label: str, params: dict) -> Path:
        return self.directory / f"{label}-{record_key(label, params)}.txt"

    def get(self, label: str, params: dict) -> str | None:
        if not self.enabled:
            return None
        p = self.path(label, params)
        try:
            raw = p.read_text()
        except (FileNotFoundError, UnicodeDecodeError):
            return None
        head, _, payload = raw.partition("\n")
        if head != f"sha256 {_digest(payload)}":
            msg = f"cache record {p.name} failed its hash check; recomputing"
            self.warnings.append(msg)
            log.warning(msg)
            return None
        return payload

    def put(self, label: str, params: dict, payload: str) -> None:
        if not self.enabled:
            return
        self.directory.mkdir(parents=True, exist_ok=True)
        target = self.path(label, params)
        fd, tmp = tempfile.mkstemp(dir=self.directory, prefix=".tmp-", suffix=".txt")
        try:
            with os.fdopen(fd, "w") as fh:
                fh.write(f"sha256 {_digest(payload)}\n{payload}")
            os.replace(tmp, target)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise

    def fetch(self, label: str, params: dict, compute: Callable[[], str]) -> str:
        """Return the cached payload, computing and storing it when missing or damaged."""
        payload = self.get(label, params)
        if payload is None:
            payload = compute()
            self.put(label, params, payload)
        return payload


_active: Cache | None = None


def activate(cache: Cache | None) -> None:
    """Route family computations through this cache (None switches caching off)."""
    global _active
    _active = cache


def active() -> Cache | None:
    return _active
