"""Content-addressed completion cache: append-only JSONL journal plus an
in-memory index. Replaying a recorded experiment touches the provider zero
times."""

from __future__ import annotations

import json
import threading
from pathlib import Path


class CompletionCache:
    def __init__(self, path: str | Path | None):
        self._path = Path(path) if path is not None else None
        self._index: dict[str, dict] = {}
        self._lock = threading.Lock()
        if self._path is not None and self._path.exists():
            with self._path.open(encoding="utf-8") as fh:
                for line in fh:
                    line = line.strip()
                    if not line:
                        continue
                    entry = json.loads(line)
                    self._index[entry["key"]] = entry["record"]

    def __len__(self) -> int:
        return len(self._index)

    def get(self, key: str) -> dict | None:
        return self._index.get(key)

    def put(self, key: str, record: dict) -> None:
        with self._lock:
            self._index[key] = record
            if self._path is not None:
                self._path.parent.mkdir(parents=True, exist_ok=True)
                with self._path.open("a", encoding="utf-8") as fh:
                    fh.write(json.dumps({"key": key, "record": record},
                                        ensure_ascii=False) + "\n")
