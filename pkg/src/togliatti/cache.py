"""Append-only JSON-lines result cache, keyed by content hashes.

Enabled when the TOGLIATTI_CACHE_DIR environment variable points at a
directory; otherwise every call is a miss and appends are dropped.
"""

from __future__ import annotations

import hashlib
import json
import os
from pathlib import Path

CACHE_ENV = "TOGLIATTI_CACHE_DIR"


def cache_key(kind: str, version: str, payload) -> str:
    blob = json.dumps({"kind": kind, "version": version, "payload": payload},
                      sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


class ResultCache:
    def __init__(self, directory: str | None = None):
        directory = directory if directory is not None else os.environ.get(CACHE_ENV)
        self.dir = Path(directory) if directory else None

    @property
    def enabled(self) -> bool:
        return self.dir is not None

    def _file(self, kind: str) -> Path:
        assert self.dir is not None
        self.dir.mkdir(parents=True, exist_ok=True)
        return self.dir / f"{kind}.jsonl"

    def lookup(self, kind: str, key: str):
        if not self.enabled:
            return None
        path = self._file(kind)
        if not path.exists():
            return None
        hit = None
        with path.open() as fh:
            for line in fh:
                try:
                    rec = json.loads(line)
                except json.JSONDecodeError:
                    continue
                if rec.get("key") == key:
                    hit = rec.get("value")
        return hit

    def append(self, kind: str, key: str, value) -> None:
        if not self.enabled:
            return
        with self._file(kind).open("a") as fh:
            fh.write(json.dumps({"key": key, "value": value}, sort_keys=True))
            fh.write("\n")
