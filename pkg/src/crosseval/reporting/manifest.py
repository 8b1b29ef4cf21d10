"""Run manifests: every exported table carries the hash of the manifest that
produced it, so any published number traces back to a config snapshot."""

from __future__ import annotations

import hashlib
import json
from dataclasses import asdict, dataclass, field
from pathlib import Path


@dataclass
class RunManifest:
    config: dict = field(default_factory=dict)
    seeds: dict = field(default_factory=dict)
    model_ids: list[str] = field(default_factory=list)
    tau_grid: list[float] = field(default_factory=list)
    dataset_checksums: dict[str, str] = field(default_factory=dict)
    decisions: dict[str, str] = field(default_factory=dict)

    def canonical_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, ensure_ascii=False)

    @property
    def hash(self) -> str:
        return hashlib.sha256(self.canonical_json().encode("utf-8")).hexdigest()[:16]

    def save(self, path: str | Path) -> None:
        payload = asdict(self)
        payload["manifest_hash"] = self.hash
        Path(path).write_text(
            json.dumps(payload, sort_keys=True, ensure_ascii=False, indent=2) + "\n",
            encoding="utf-8",
        )


def checksum_file(path: str | Path) -> str:
    digest = hashlib.sha256()
    with Path(path).open("rb") as fh:
        for chunk in iter(lambda: fh.read(65536), b""):
            digest.update(chunk)
    return digest.hexdigest()[:16]
