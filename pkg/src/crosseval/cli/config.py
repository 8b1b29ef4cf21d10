"""Run configuration: TOML file with env-var interpolation for secrets.

Unknown sections or keys are rejected up front, before any provider call.
Flags override file values at the command layer.
"""

from __future__ import annotations

import os
import re
import sys
from dataclasses import dataclass, field
from pathlib import Path

from ..errors import ConfigError

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

_ENV_RE = re.compile(r"\$\{([A-Za-z_][A-Za-z0-9_]*)\}")

_SCHEMA: dict[str, set[str]] = {
    "run": {"output_dir", "seed", "languages", "workers"},
    "datasets": set(),  # free-form: name -> path
    "llm": {
        "provider", "fixture", "base_url", "api_key_env", "model", "grader_model",
        "cache_path", "max_calls", "requests_per_minute", "max_tokens",
    },
    "correctness": {"temperature", "fraction", "n_batches"},
    "consistency": {
        "k_samples", "tau_grid", "topic_iterations", "embedding",
        "embedding_url", "embedding_dimension", "back_translate_length",
    },
    "verifiability": {"negatives_per_question", "tau_grid", "max_tokens"},
    "annotate": {"journal", "annotators", "host", "port"},
}

_DEFAULTS: dict[str, dict] = {
    "run": {"output_dir": "out", "seed": 0, "languages": ["en"], "workers": 1},
    "datasets": {},
    "llm": {
        "provider": "mock",
        "fixture": "",
        "base_url": "",
        "api_key_env": "CROSSEVAL_LLM_API_KEY",
        "model": "default-model",
        "grader_model": "",
        "cache_path": "",
        "max_calls": 0,
        "requests_per_minute": 0,
        "max_tokens": 1024,
    },
    "correctness": {"temperature": 0.0, "fraction": 0.1, "n_batches": 2},
    "consistency": {
        "k_samples": 10,
        "tau_grid": [0.0, 0.25, 0.5, 0.75, 1.0],
        "topic_iterations": 200,
        "embedding": "hashing",
        "embedding_url": "",
        "embedding_dimension": 64,
        "back_translate_length": False,
    },
    "verifiability": {
        "negatives_per_question": 4,
        "tau_grid": [0.0, 0.25, 0.5, 0.75, 1.0],
        "max_tokens": 256,
    },
    "annotate": {"journal": "", "annotators": [], "host": "127.0.0.1", "port": 8100},
}


def _interpolate(value):
    if isinstance(value, str):
        def sub(match: re.Match) -> str:
            name = match.group(1)
            if name not in os.environ:
                raise ConfigError(f"environment variable {name} is not set")
            return os.environ[name]

        return _ENV_RE.sub(sub, value)
    if isinstance(value, list):
        return [_interpolate(v) for v in value]
    if isinstance(value, dict):
        return {k: _interpolate(v) for k, v in value.items()}
    return value


@dataclass
class RunConfig:
    path: Path
    sections: dict = field(default_factory=dict)

    def section(self, name: str) -> dict:
        return self.sections[name]

    @property
    def output_dir(self) -> Path:
        return Path(self.sections["run"]["output_dir"])

    @property
    def seed(self) -> int:
        return int(self.sections["run"]["seed"])

    @property
    def languages(self) -> list[str]:
        return list(self.sections["run"]["languages"])

    @property
    def datasets(self) -> dict[str, str]:
        return dict(self.sections["datasets"])

    @property
    def workers(self) -> int:
        return int(self.sections["run"]["workers"])


def load_config(path: str | Path) -> RunConfig:
    path = Path(path)
    if not path.exists():
        raise ConfigError(f"config file not found: {path}")
    with path.open("rb") as fh:
        raw = tomllib.load(fh)

    for section, keys in raw.items():
        if section not in _SCHEMA:
            raise ConfigError(f"unknown config section [{section}]")
        allowed = _SCHEMA[section]
        if allowed and isinstance(keys, dict):
            for key in keys:
                if key not in allowed:
                    raise ConfigError(f"unknown key '{key}' in section [{section}]")

    merged: dict = {}
    for section, defaults in _DEFAULTS.items():
        merged[section] = dict(defaults)
        merged[section].update(raw.get(section, {}))
    return RunConfig(path=path, sections=_interpolate(merged))
