"""Flat key=value configuration with environment overrides.

Every key in the file must be known; environment variables with the same
names override file values. Configured paths must exist at load time so a
bad deployment fails before serving traffic. data_dir is the exception: it
is created on first write.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, fields
from pathlib import Path
from typing import Mapping

PATH_KEYS = (
    "sentiment_lexicon",
    "degree_lexicon",
    "negation_lexicon",
    "stopword_lexicon",
    "gazetteer",
    "sources",
    "segmenter_vocab",
    "embedding_model",
    "classifier_model",
    "static_dir",
)
INT_KEYS = ("port", "page_size")
STORE_FILENAME = "documents.jsonl"


class ConfigError(ValueError):
    """Unusable configuration: unknown key, bad value, or missing file."""


@dataclass
class AppConfig:
    """Resolved settings for the CLI and the HTTP service."""

    data_dir: str = "data"
    sentiment_lexicon: str | None = None
    degree_lexicon: str | None = None
    negation_lexicon: str | None = None
    stopword_lexicon: str | None = None
    gazetteer: str | None = None
    sources: str | None = None
    segmenter_vocab: str | None = None
    embedding_model: str | None = None
    classifier_model: str | None = None
    static_dir: str | None = None
    host: str = "127.0.0.1"
    port: int = 8080
    page_size: int = 20

    @property
    def store_path(self) -> Path:
        return Path(self.data_dir) / STORE_FILENAME

    @property
    def lexicon_paths(self) -> tuple[str | None, str | None, str | None, str | None]:
        return (
            self.sentiment_lexicon,
            self.degree_lexicon,
            self.negation_lexicon,
            self.stopword_lexicon,
        )

    def validate(self) -> None:
        if not 1 <= self.port <= 65535:
            raise ConfigError(f"port must be in [1, 65535], got {self.port}")
        if self.page_size < 1:
            raise ConfigError(f"page_size must be positive, got {self.page_size}")
        configured = [p for p in self.lexicon_paths if p is not None]
        if configured and len(configured) != 4:
            raise ConfigError("configure all four lexicon paths or none")
        for key in PATH_KEYS:
            value = getattr(self, key)
            if value is not None and not Path(value).exists():
                raise ConfigError(f"{key} points to a missing path: {value}")


CONFIG_KEYS = tuple(f.name for f in fields(AppConfig))


def _parse_file(path) -> dict[str, str]:
    values: dict[str, str] = {}
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ConfigError(f"{path}:{lineno}: expected key=value, got {line!r}")
        key = key.strip()
        if key not in CONFIG_KEYS:
            raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
        values[key] = value.strip()
    return values


def load_config(path=None, env: Mapping[str, str] | None = None) -> AppConfig:
    """Build an AppConfig from an optional file plus environment overrides."""
    env = os.environ if env is None else env
    values = _parse_file(path) if path is not None else {}
    for key in CONFIG_KEYS:
        if key in env:
            values[key] = env[key]
    kwargs: dict = {}
    for key, value in values.items():
        if key in INT_KEYS:
            try:
                kwargs[key] = int(value)
            except ValueError as exc:
                raise ConfigError(f"{key} must be an integer, got {value!r}") from exc
        else:
            kwargs[key] = value or None
    config = AppConfig(**kwargs)
    if not config.data_dir:
        raise ConfigError("data_dir must not be empty")
    config.validate()
    return config
