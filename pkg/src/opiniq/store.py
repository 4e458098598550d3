"""Opinion document store: cleaning, deduplication, JSONL persistence, queries.

The store is the single source of truth for documents. Persistence is one
JSON object per line in an append-friendly file; the in-memory index is
rebuilt when the store is opened. Writes are serialized through a lock and
swap in a new immutable snapshot, so readers never observe a half-applied
batch.
"""

from __future__ import annotations

import hashlib
import json
import re
import threading
from dataclasses import dataclass, field, replace
from datetime import date, datetime, timedelta, timezone
from pathlib import Path
from typing import Iterable, Mapping

MEDIA_TYPES = ("government", "mass", "social")

MIN_PUBLISHED = datetime(1990, 1, 1, tzinfo=timezone.utc)

_TAG_RE = re.compile(r"<[^>]*>")
_WS_RE = re.compile(r"\s+")


class DocumentRejected(Exception):
    """Raised when a raw document cannot be turned into a clean one.

    ``reason`` is a stable code: empty_content, bad_timestamp, missing_url,
    unknown_source or malformed_line (the last two are raised by the ingest
    pipeline, not by clean_document itself).
    """

    def __init__(self, reason: str, detail: str = ""):
        super().__init__(f"{reason}: {detail}" if detail else reason)
        self.reason = reason


class QueryParamError(ValueError):
    """Invalid query parameter; ``field`` names the offending one."""

    def __init__(self, fieldname: str, message: str):
        super().__init__(message)
        self.field = fieldname


@dataclass(slots=True)
class OpinionDocument:
    """One opinion item with enrichment and sentiment fields."""

    id: str
    title: str
    content: str
    published_at: datetime
    source_name: str
    url: str
    media_type: str = ""
    abstract: str = ""
    keywords: list[str] = field(default_factory=list)
    regions: list[str] = field(default_factory=list)
    primary_region: str | None = None
    sentiment_label: str | None = None
    sentiment_score: float | None = None
    model_probability: float | None = None

    def to_record(self) -> dict:
        return {
            "id": self.id,
            "title": self.title,
            "content": self.content,
            "published_at": format_timestamp(self.published_at),
            "source_name": self.source_name,
            "media_type": self.media_type,
            "url": self.url,
            "abstract": self.abstract,
            "keywords": list(self.keywords),
            "regions": list(self.regions),
            "primary_region": self.primary_region,
            "sentiment_label": self.sentiment_label,
            "sentiment_score": self.sentiment_score,
            "model_probability": self.model_probability,
        }

    @classmethod
    def from_record(cls, rec: Mapping) -> "OpinionDocument":
        return cls(
            id=rec["id"],
            title=rec.get("title", ""),
            content=rec.get("content", ""),
            published_at=parse_timestamp(rec["published_at"]),
            source_name=rec.get("source_name", ""),
            media_type=rec.get("media_type", ""),
            url=rec["url"],
            abstract=rec.get("abstract", ""),
            keywords=list(rec.get("keywords") or []),
            regions=list(rec.get("regions") or []),
            primary_region=rec.get("primary_region"),
            sentiment_label=rec.get("sentiment_label"),
            sentiment_score=rec.get("sentiment_score"),
            model_probability=rec.get("model_probability"),
        )


def clean_text(text: str) -> str:
    """Strip markup tags, collapse whitespace runs, trim. Idempotent."""
    text = _TAG_RE.sub(" ", text)
    text = _WS_RE.sub(" ", text)
    return text.strip()


def parse_timestamp(value) -> datetime:
    """Parse an ISO-8601 date or date-time into an aware UTC datetime.

    Date-only values become midnight UTC; naive date-times are taken as UTC.
    """
    if isinstance(value, datetime):
        dt = value
    elif isinstance(value, date):
        dt = datetime(value.year, value.month, value.day)
    elif isinstance(value, str):
        raw = value.strip()
        if raw.endswith(("Z", "z")):
            raw = raw[:-1] + "+00:00"
        try:
            dt = datetime.fromisoformat(raw)
        except ValueError:
            raise DocumentRejected("bad_timestamp", value) from None
    else:
        raise DocumentRejected("bad_timestamp", repr(value))
    if dt.tzinfo is None:
        dt = dt.replace(tzinfo=timezone.utc)
    return dt.astimezone(timezone.utc)


def format_timestamp(dt: datetime) -> str:
    return dt.astimezone(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")


def document_id(url: str) -> str:
    """Opaque stable identifier derived from the document URL."""
    return hashlib.sha256(url.encode("utf-8")).hexdigest()[:16]


def content_fingerprint(title: str, content: str) -> str:
    """Hash of normalized title+content, used for near-duplicate removal."""
    norm = clean_text(title) + "\x00" + clean_text(content)
    return hashlib.sha256(norm.encode("utf-8")).hexdigest()


def clean_document(raw: Mapping) -> OpinionDocument:
    """Clean a raw record into an OpinionDocument or raise DocumentRejected.

    Markup is stripped from title and content, whitespace runs are collapsed,
    and the timestamp is validated against [1990-01-01, now + 1 day].
    """
    url = str(raw.get("url") or "").strip()
    if not url:
        raise DocumentRejected("missing_url")
    published = parse_timestamp(raw.get("published_at"))
    now_plus = datetime.now(timezone.utc) + timedelta(days=1)
    if not (MIN_PUBLISHED <= published <= now_plus):
        raise DocumentRejected("bad_timestamp", f"out of range: {published.isoformat()}")
    content = clean_text(str(raw.get("content") or ""))
    if not content:
        raise DocumentRejected("empty_content", url)
    return OpinionDocument(
        id=document_id(url),
        title=clean_text(str(raw.get("title") or "")),
        content=content,
        published_at=published,
        source_name=str(raw.get("source_name") or "").strip(),
        media_type=str(raw.get("media_type") or ""),
        url=url,
    )


def dedup(batch: Iterable[OpinionDocument]) -> list[OpinionDocument]:
    """Drop later duplicates by URL and by content fingerprint, keeping order."""
    seen_urls: set[str] = set()
    seen_hashes: set[str] = set()
    out = []
    for doc in batch:
        fp = content_fingerprint(doc.title, doc.content)
        if doc.url in seen_urls or fp in seen_hashes:
            continue
        seen_urls.add(doc.url)
        seen_hashes.add(fp)
        out.append(doc)
    return out


@dataclass(frozen=True)
class QueryPage:
    total: int
    documents: tuple[OpinionDocument, ...]


def _parse_bound(value, fieldname: str) -> tuple[datetime, bool]:
    """Accept a date, datetime, or ISO string; return (UTC datetime, is_date_only)."""
    try:
        if isinstance(value, datetime):
            return parse_timestamp(value), False
        if isinstance(value, date):
            return datetime(value.year, value.month, value.day, tzinfo=timezone.utc), True
        text = str(value).strip()
        date_only = "T" not in text and " " not in text and ":" not in text
        return parse_timestamp(text), date_only
    except DocumentRejected:
        raise QueryParamError(fieldname, f"unparseable date: {value!r}") from None


class SourceRegistry:
    """Maps source host/name to a media type; loaded from CSV."""

    def __init__(self, entries: Mapping[str, str] | None = None):
        self.entries: dict[str, str] = {}
        for name, media in (entries or {}).items():
            self.add(name, media)

    def add(self, name: str, media: str) -> None:
        name = name.strip()
        media = media.strip()
        if media not in MEDIA_TYPES:
            raise ValueError(f"unknown media type {media!r} for source {name!r}")
        if name in self.entries and self.entries[name] != media:
            raise ValueError(f"conflicting media type for source {name!r}")
        self.entries[name] = media

    def resolve(self, source_name: str) -> str | None:
        return self.entries.get(source_name.strip())

    @classmethod
    def load(cls, path: str | Path) -> "SourceRegistry":
        reg = cls()
        for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if line.replace(" ", "") == "source_name,media_type":
                continue  # optional header
            parts = line.split(",")
            if len(parts) != 2:
                raise ValueError(f"{path}:{lineno}: expected 'source_name,media_type'")
            reg.add(parts[0], parts[1])
        return reg


class CorpusStore:
    """Append-friendly JSONL store with an in-memory snapshot.

    Single-writer, multi-reader: queries run against an immutable tuple that
    add_batch swaps atomically after appending to the file.
    """

    def __init__(self, path: str | Path):
        self.path = Path(path)
        self._lock = threading.Lock()
        docs: list[OpinionDocument] = []
        if self.path.exists():
            with self.path.open(encoding="utf-8") as fh:
                for line in fh:
                    line = line.strip()
                    if line:
                        docs.append(OpinionDocument.from_record(json.loads(line)))
        self._docs: tuple[OpinionDocument, ...] = tuple(docs)
        self._urls = {d.url for d in docs}
        self._hashes = {content_fingerprint(d.title, d.content) for d in docs}

    def __len__(self) -> int:
        return len(self._docs)

    def snapshot(self) -> tuple[OpinionDocument, ...]:
        return self._docs

    def get(self, doc_id: str) -> OpinionDocument | None:
        for doc in self._docs:
            if doc.id == doc_id:
                return doc
        return None

    def add_batch(self, batch: Iterable[OpinionDocument]) -> tuple[int, int]:
        """Store new documents, skipping duplicates. Returns (stored, duplicates).

        Duplicates are judged against both the incoming batch and the store,
        first-writer-wins. The snapshot swap happens after the file append so
        a crash can lose the tail of a batch but never corrupt ordering.
        """
        batch = list(batch)
        with self._lock:
            fresh = []
            for doc in dedup(batch):
                fp = content_fingerprint(doc.title, doc.content)
                if doc.url in self._urls or fp in self._hashes:
                    continue
                if doc.media_type not in MEDIA_TYPES:
                    raise ValueError(
                        f"document {doc.url!r} has unresolved media_type {doc.media_type!r}"
                    )
                fresh.append((doc, fp))
            if fresh:
                self.path.parent.mkdir(parents=True, exist_ok=True)
                with self.path.open("a", encoding="utf-8") as fh:
                    for doc, _ in fresh:
                        fh.write(json.dumps(doc.to_record(), ensure_ascii=False) + "\n")
                docs = list(self._docs)
                for doc, fp in fresh:
                    docs.append(doc)
                    self._urls.add(doc.url)
                    self._hashes.add(fp)
                self._docs = tuple(docs)
            return len(fresh), len(batch) - len(fresh)

    def update_documents(self, docs: Iterable[OpinionDocument]) -> int:
        """Replace stored documents by id (reclassification path); rewrites the file."""
        by_id = {d.id: d for d in docs}
        with self._lock:
            updated = tuple(by_id.get(d.id, d) for d in self._docs)
            with self.path.open("w", encoding="utf-8") as fh:
                for doc in updated:
                    fh.write(json.dumps(doc.to_record(), ensure_ascii=False) + "\n")
            self._docs = updated
            return sum(1 for d in self._docs if d.id in by_id)

    def filter_documents(
        self,
        keyword: str | None = None,
        date_from=None,
        date_to=None,
        media_type: str | None = None,
        region: str | None = None,
    ) -> list[OpinionDocument]:
        """All matching documents, newest first (ties broken by id).

        Keyword matching is a plain substring test against the normalized
        title and content; date bounds are inclusive calendar bounds.
        """
        if media_type is not None and media_type not in MEDIA_TYPES:
            raise QueryParamError("media_type", f"unknown media_type {media_type!r}")

        lo = _parse_bound(date_from, "from")[0] if date_from is not None else None
        hi = None
        if date_to is not None:
            hi, date_only = _parse_bound(date_to, "to")
            if date_only:
                hi = hi + timedelta(days=1) - timedelta(microseconds=1)
        if lo is not None and hi is not None and hi < lo:
            raise QueryParamError("to", "date range is inverted")

        needle = clean_text(keyword) if keyword else None
        matches = []
        for doc in self._docs:
            if needle and needle not in doc.title and needle not in doc.content:
                continue
            if lo is not None and doc.published_at < lo:
                continue
            if hi is not None and doc.published_at > hi:
                continue
            if media_type is not None and doc.media_type != media_type:
                continue
            if region is not None and doc.primary_region != region:
                continue
            matches.append(doc)
        matches.sort(key=lambda d: (-d.published_at.timestamp(), d.id))
        return matches

    def query(
        self,
        keyword: str | None = None,
        date_from=None,
        date_to=None,
        media_type: str | None = None,
        region: str | None = None,
        page: int = 1,
        page_size: int = 50,
    ) -> QueryPage:
        """Filter and page documents, newest first (ties broken by id)."""
        if not isinstance(page, int) or page < 1:
            raise QueryParamError("page", f"page must be >= 1, got {page!r}")
        if not isinstance(page_size, int) or not 1 <= page_size <= 500:
            raise QueryParamError("page_size", f"page_size must be in [1, 500], got {page_size!r}")
        matches = self.filter_documents(keyword, date_from, date_to, media_type, region)
        total = len(matches)
        start = (page - 1) * page_size
        return QueryPage(total=total, documents=tuple(matches[start : start + page_size]))


def resolve_media_type(doc: OpinionDocument, registry: SourceRegistry | None) -> OpinionDocument:
    """Fill in media_type from a per-document override or the registry.

    An explicit valid media_type on the document wins; otherwise the source
    registry decides. Unresolvable documents are rejected (unknown_source).
    """
    if doc.media_type in MEDIA_TYPES:
        return doc
    resolved = registry.resolve(doc.source_name) if registry else None
    if resolved is None:
        raise DocumentRejected("unknown_source", doc.source_name or doc.url)
    return replace(doc, media_type=resolved)
