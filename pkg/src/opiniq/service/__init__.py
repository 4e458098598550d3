"""Platform shell: configuration, ingestion pipeline, HTTP API, CLI."""

from .config import AppConfig, ConfigError, load_config
from .pipeline import IngestReport, Platform

__all__ = ["AppConfig", "ConfigError", "IngestReport", "Platform", "load_config"]
