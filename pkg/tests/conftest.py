"""Shared test helpers: toy lexicons, fixture paths, document and platform factories."""

from __future__ import annotations

import json
from datetime import datetime, timezone
from pathlib import Path

import pytest

from opiniq.lexicon import DEFAULT_MULTIPLIERS, Lexicons
from opiniq.service import AppConfig, Platform
from opiniq.store import OpinionDocument, document_id

ROOT = Path(__file__).resolve().parents[1]
FIXTURES = ROOT / "fixtures"

ACCEPTANCE_LINES: list[str] = []


def record_acceptance(line: str) -> None:
    """Collect a criterion verdict line and echo it immediately."""
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def toy_lexicons(**overrides) -> Lexicons:
    """Small in-memory lexicon set; keyword overrides replace whole fields."""
    base = dict(
        sentiment={"good": 1.0, "great": 2.0, "fine": 0.5, "bad": -1.0, "awful": -2.0},
        degree={
            "most": "most",
            "very": "very",
            "more": "more",
            "nearly": "nearly",
            "barely": "barely",
        },
        multipliers=dict(DEFAULT_MULTIPLIERS),
        negation=frozenset({"not", "never"}),
        stopwords=frozenset({"the", "a", "is", "was"}),
    )
    base.update(overrides)
    return Lexicons(**base)


def make_doc(
    i: int = 0,
    *,
    title: str | None = None,
    content: str | None = None,
    published: str | datetime = "2021-03-01T12:00:00Z",
    source: str = "city-daily",
    media_type: str = "mass",
    url: str | None = None,
    label: str | None = None,
    score: float | None = None,
    region: str | None = None,
) -> OpinionDocument:
    """A valid enriched document with per-test overrides."""
    if isinstance(published, str):
        ts = published.replace("Z", "+00:00")
        published_at = datetime.fromisoformat(ts).astimezone(timezone.utc)
    else:
        published_at = published.astimezone(timezone.utc)
    url = url or f"https://example.test/doc/{i}"
    return OpinionDocument(
        id=document_id(url),
        title=title if title is not None else f"title {i}",
        content=content if content is not None else f"content number {i}",
        published_at=published_at,
        source_name=source,
        media_type=media_type,
        url=url,
        sentiment_label=label,
        sentiment_score=score,
        primary_region=region,
        regions=[region] if region else [],
    )


def doc_line(i: int = 0, **overrides) -> str:
    """One raw JSONL ingest record, overridable per field."""
    record = {
        "url": f"https://example.test/item/{i}",
        "title": f"report {i} in wuhan",
        "content": f"the work is really great in wuhan。item {i}。",
        "published_at": "2021-03-02T08:00:00Z",
        "source_name": "city-daily",
    }
    record.update(overrides)
    return json.dumps(record)


def fixture_config(tmp_path: Path, **overrides) -> AppConfig:
    """AppConfig rooted in a temp dir, wired to the shared file fixtures."""
    cfg = AppConfig(
        data_dir=str(tmp_path / "data"),
        sentiment_lexicon=str(FIXTURES / "sentiment.tsv"),
        degree_lexicon=str(FIXTURES / "degree.tsv"),
        negation_lexicon=str(FIXTURES / "negation.txt"),
        stopword_lexicon=str(FIXTURES / "stopwords.txt"),
        gazetteer=str(FIXTURES / "gazetteer.csv"),
        sources=str(FIXTURES / "sources.csv"),
        segmenter_vocab=str(FIXTURES / "vocab.txt"),
    )
    for key, value in overrides.items():
        setattr(cfg, key, value)
    cfg.validate()
    return cfg


def write_config_file(tmp_path: Path, **overrides) -> Path:
    """Write a config file mirroring fixture_config; returns its path."""
    cfg = fixture_config(tmp_path, **overrides)
    lines = [f"data_dir = {cfg.data_dir}"]
    for key in (
        "sentiment_lexicon",
        "degree_lexicon",
        "negation_lexicon",
        "stopword_lexicon",
        "gazetteer",
        "sources",
        "segmenter_vocab",
        "embedding_model",
        "classifier_model",
    ):
        value = getattr(cfg, key)
        if value is not None:
            lines.append(f"{key} = {value}")
    path = tmp_path / "app.conf"
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path


@pytest.fixture
def lexicons() -> Lexicons:
    return toy_lexicons()


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def platform(tmp_path) -> Platform:
    return Platform(fixture_config(tmp_path))
