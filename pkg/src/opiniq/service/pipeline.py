"""Document pipeline: clean, resolve media, dedup, enrich, classify, store.

The Platform object loads every configured asset once (store, source
registry, lexicons, gazetteer, segmenter vocabulary, embedding and
classifier models) and exposes the ingest, classification, and analytics
entry points shared by the HTTP API and the CLI.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from typing import Iterable, Sequence

from .. import analytics
from ..classifiers import load_classifier, predict_tokens
from ..classifiers._common import sigmoid_scalar
from ..embeddings import EmbeddingModel
from ..enrichment import Gazetteer, extract_regions, textrank_abstract, textrank_keywords
from ..lexicon import Lexicons, default_vocab, load_lexicons, score_document
from ..segment import SegmenterVocab, tokenize
from ..store import (
    CorpusStore,
    DocumentRejected,
    OpinionDocument,
    SourceRegistry,
    _parse_bound,
    clean_document,
    clean_text,
    resolve_media_type,
)
from .config import AppConfig, ConfigError

KEYWORD_COUNT = 10
ABSTRACT_SENTENCES = 3


@dataclass
class IngestReport:
    """Counts for one ingest run; read = stored + rejected + duplicates."""

    read: int = 0
    stored: int = 0
    duplicates: int = 0
    reasons: dict[str, int] = field(default_factory=dict)

    @property
    def rejected(self) -> int:
        return sum(self.reasons.values())

    def count_rejection(self, reason: str) -> None:
        self.reasons[reason] = self.reasons.get(reason, 0) + 1

    def to_jsonable(self) -> dict:
        return {
            "read": self.read,
            "stored": self.stored,
            "rejected": self.rejected,
            "duplicates": self.duplicates,
            "reasons": dict(sorted(self.reasons.items())),
        }


class Platform:
    """All loaded assets plus the operations the API and CLI expose."""

    def __init__(self, config: AppConfig):
        self.config = config
        self.store = CorpusStore(config.store_path)
        self.registry = (
            SourceRegistry.load(config.sources) if config.sources else None
        )
        self.lexicons: Lexicons | None = None
        if config.sentiment_lexicon:
            self.lexicons = load_lexicons(
                config.sentiment_lexicon,
                config.degree_lexicon,
                config.negation_lexicon,
                config.stopword_lexicon,
            )
        self.gazetteer = Gazetteer.load(config.gazetteer) if config.gazetteer else None
        if config.segmenter_vocab:
            self.vocab = SegmenterVocab.load(config.segmenter_vocab)
        elif self.lexicons is not None:
            extra = self.gazetteer.names() if self.gazetteer else ()
            self.vocab = default_vocab(self.lexicons, extra)
        else:
            self.vocab = SegmenterVocab(())
        self.embeddings = (
            EmbeddingModel.load(config.embedding_model)
            if config.embedding_model
            else None
        )
        self.classifier = (
            load_classifier(config.classifier_model)
            if config.classifier_model
            else None
        )
        if self.classifier is not None:
            if self.embeddings is None:
                raise ConfigError("classifier_model requires embedding_model")
            if self.classifier.input_dim != self.embeddings.dim:
                raise ConfigError(
                    f"classifier expects dim {self.classifier.input_dim}, "
                    f"embeddings have dim {self.embeddings.dim}"
                )

    def _require_lexicons(self) -> Lexicons:
        if self.lexicons is None:
            raise ConfigError("this operation needs the four lexicon paths configured")
        return self.lexicons

    @property
    def _stopwords(self):
        return self.lexicons.stopwords if self.lexicons else frozenset()

    @staticmethod
    def _full_text(doc: OpinionDocument) -> str:
        if doc.title and doc.content:
            return f"{doc.title}。{doc.content}"
        return doc.title or doc.content

    def _model_fields(self, tokens: Sequence[str]) -> tuple[str, float] | None:
        """Model label and probability for pre-tokenized text, if a model is loaded."""
        if self.classifier is None or self.embeddings is None:
            return None
        result = predict_tokens(tokens, self.classifier, self.embeddings)
        value = result["value"]
        probability = sigmoid_scalar(value) if result["kind"] == "svm" else value
        return result["label"], float(probability)

    def enrich_and_classify(self, doc: OpinionDocument) -> OpinionDocument:
        """Fill regions, keywords, abstract, and sentiment fields."""
        lex = self._require_lexicons()
        text = self._full_text(doc)
        regions: tuple[str, ...] = ()
        primary = None
        if self.gazetteer is not None:
            extraction = extract_regions(text, self.gazetteer)
            primary = extraction.primary
            regions = tuple(sorted({m.province_code for m in extraction.mentions}))
        keywords = tuple(
            word
            for word, _ in textrank_keywords(
                text, KEYWORD_COUNT, vocab=self.vocab, stopwords=lex.stopwords
            )
        )
        abstract = " ".join(
            textrank_abstract(
                doc.content, ABSTRACT_SENTENCES, vocab=self.vocab, stopwords=lex.stopwords
            )
        )
        sentiment = score_document(text, lex, self.vocab)
        label = sentiment.label
        model_probability = None
        model = self._model_fields(tokenize(clean_text(text), self.vocab))
        if model is not None:
            label, model_probability = model
        return replace(
            doc,
            regions=regions,
            primary_region=primary,
            keywords=keywords,
            abstract=abstract,
            sentiment_score=sentiment.score,
            sentiment_label=label,
            model_probability=model_probability,
        )

    def ingest_records(self, lines: Iterable[str]) -> IngestReport:
        """Run the full pipeline over JSONL lines and store the survivors."""
        report = IngestReport()
        ready: list[OpinionDocument] = []
        for line in lines:
            if not line.strip():
                continue
            report.read += 1
            try:
                raw = json.loads(line)
            except json.JSONDecodeError:
                report.count_rejection("malformed_line")
                continue
            if not isinstance(raw, dict):
                report.count_rejection("malformed_line")
                continue
            try:
                doc = clean_document(raw)
                doc = resolve_media_type(doc, self.registry)
            except DocumentRejected as exc:
                report.count_rejection(exc.reason)
                continue
            ready.append(self.enrich_and_classify(doc))
        stored, duplicates = self.store.add_batch(ready)
        report.stored = stored
        report.duplicates = duplicates
        return report

    def ingest_path(self, path) -> IngestReport:
        with open(path, "r", encoding="utf-8") as fh:
            return self.ingest_records(fh)

    def reclassify(self) -> int:
        """Re-run enrichment and classification over every stored document."""
        updated = [self.enrich_and_classify(doc) for doc in self.store.snapshot()]
        return self.store.update_documents(updated)

    def classify_text(self, text: str) -> dict:
        """Lexicon result plus the model's verdict when one is loaded."""
        lex = self._require_lexicons()
        sentiment = score_document(text, lex, self.vocab)
        model = self._model_fields(tokenize(clean_text(text), self.vocab))
        return {
            "lexicon": {"score": sentiment.score, "label": sentiment.label},
            "model": None
            if model is None
            else {"label": model[0], "probability": model[1]},
        }

    def cohort(
        self,
        keyword: str | None = None,
        date_from=None,
        date_to=None,
        media_type: str | None = None,
        region: str | None = None,
    ) -> list[OpinionDocument]:
        return self.store.filter_documents(keyword, date_from, date_to, media_type, region)

    def _resolve_range(self, docs, date_from, date_to):
        if date_from is not None and date_to is not None:
            return date_from, date_to
        if not docs:
            return None
        days = sorted(d.published_at.date() for d in docs)
        lo = date_from if date_from is not None else days[0]
        hi = date_to if date_to is not None else days[-1]
        return lo, hi

    def trends(self, keyword=None, date_from=None, date_to=None) -> list:
        """Daily series over the matching cohort; range defaults to its extent."""
        docs = self.cohort(keyword, date_from, date_to)
        bounds = self._resolve_range(
            docs, _as_date(date_from, "from"), _as_date(date_to, "to")
        )
        if bounds is None:
            return []
        return analytics.trend_series(docs, bounds[0], bounds[1])

    def region_stats(self, keyword=None, date_from=None, date_to=None) -> list:
        return analytics.region_stats(self.cohort(keyword, date_from, date_to))

    def media_summary(self, keyword=None, date_from=None, date_to=None) -> dict:
        return analytics.media_summary(self.cohort(keyword, date_from, date_to))


def _as_date(value, fieldname: str):
    if value is None:
        return None
    return _parse_bound(value, fieldname)[0].date()
