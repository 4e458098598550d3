"""Lexicon-based sentiment scoring with degree adverbs and negation.

Scoring walks each sentence left to right. A sentiment word contributes its
base weight multiplied by the degree adverbs and sign-flipped by the parity
of negation words that appear in its modifier window, the span of tokens
since the previous sentiment word (or the sentence start). Sentence scores
add up to the document score; a positive total means positive sentiment,
anything else (including zero) is negative.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .segment import SegmenterVocab, remove_stopwords, split_sentences, tokenize

DEGREE_CATEGORIES = ("most", "very", "more", "nearly", "barely")

DEFAULT_MULTIPLIERS = {
    "most": 2.0,
    "very": 1.75,
    "more": 1.5,
    "nearly": 0.8,
    "barely": 0.5,
}


class LexiconError(ValueError):
    """Malformed or inconsistent lexicon files."""


@dataclass(frozen=True)
class Lexicons:
    """The four dictionaries driving the scorer, validated for disjointness."""

    sentiment: Mapping[str, float]
    degree: Mapping[str, str]
    multipliers: Mapping[str, float]
    negation: frozenset[str]
    stopwords: frozenset[str]

    def __post_init__(self):
        for word in self.sentiment:
            if word in self.degree or word in self.negation:
                raise LexiconError(f"word {word!r} appears in more than one dictionary")
        for word in self.degree:
            if word in self.negation:
                raise LexiconError(f"word {word!r} appears in more than one dictionary")
        for word, weight in self.sentiment.items():
            if weight == 0:
                raise LexiconError(f"sentiment word {word!r} has zero weight")
        for cat, mult in self.multipliers.items():
            if cat not in DEGREE_CATEGORIES:
                raise LexiconError(f"unknown degree category {cat!r}")
            if mult <= 0:
                raise LexiconError(f"degree multiplier for {cat!r} must be positive")
        missing = [c for c in DEGREE_CATEGORIES if c not in self.multipliers]
        if missing:
            raise LexiconError(f"missing degree multipliers for {missing}")
        ordered = [self.multipliers[c] for c in DEGREE_CATEGORIES]
        if any(nxt >= prev for prev, nxt in zip(ordered, ordered[1:])):
            raise LexiconError(
                "degree multipliers must strictly decrease in the order "
                + " > ".join(DEGREE_CATEGORIES)
            )

    @property
    def modifier_words(self) -> frozenset[str]:
        """Negation and degree words; exempt from stopword removal."""
        return frozenset(self.degree) | self.negation

    def counts(self) -> dict[str, int]:
        return {
            "sentiment": len(self.sentiment),
            "degree": len(self.degree),
            "negation": len(self.negation),
            "stopwords": len(self.stopwords),
        }


@dataclass(frozen=True)
class SentimentResult:
    score: float
    label: str
    per_sentence: tuple[tuple[str, float], ...]


def _read_lines(path: str | Path) -> list[str]:
    return [ln.strip() for ln in Path(path).read_text(encoding="utf-8").splitlines() if ln.strip()]


def load_lexicons(
    sentiment_path: str | Path,
    degree_path: str | Path,
    negation_path: str | Path,
    stopword_path: str | Path,
) -> Lexicons:
    """Load and validate the four dictionaries.

    Sentiment file: ``word<TAB>weight``. Degree file: ``word<TAB>category``
    with optional ``#category<TAB>multiplier`` header lines overriding the
    default multiplier table. Negation and stopword files: one word per line.
    """
    sentiment: dict[str, float] = {}
    for ln in _read_lines(sentiment_path):
        parts = ln.split("\t")
        if len(parts) != 2:
            raise LexiconError(f"sentiment entry needs 'word<TAB>weight': {ln!r}")
        try:
            sentiment[parts[0]] = float(parts[1])
        except ValueError:
            raise LexiconError(f"non-numeric weight for {parts[0]!r}: {parts[1]!r}") from None

    degree: dict[str, str] = {}
    multipliers = dict(DEFAULT_MULTIPLIERS)
    for ln in _read_lines(degree_path):
        parts = ln.split("\t")
        if len(parts) != 2:
            raise LexiconError(f"degree entry needs 'word<TAB>category': {ln!r}")
        word, cat = parts
        if word.startswith("#"):
            cat_name = word[1:]
            if cat_name not in DEGREE_CATEGORIES:
                raise LexiconError(f"unknown degree category {cat_name!r}")
            try:
                multipliers[cat_name] = float(cat)
            except ValueError:
                raise LexiconError(f"non-numeric multiplier for {cat_name!r}: {cat!r}") from None
            continue
        if cat not in DEGREE_CATEGORIES:
            raise LexiconError(f"unknown degree category {cat!r} for word {word!r}")
        degree[word] = cat

    negation = frozenset(_read_lines(negation_path))
    stopwords = frozenset(_read_lines(stopword_path))
    return Lexicons(
        sentiment=sentiment,
        degree=degree,
        multipliers=multipliers,
        negation=negation,
        stopwords=stopwords,
    )


def score_sentence(tokens: Sequence[str], lex: Lexicons) -> float:
    """Sum modifier-adjusted contributions of the sentiment words in one sentence.

    Expects tokens already stopword-filtered with modifier words exempt. The
    modifier window for a sentiment word spans the tokens strictly between
    the previous sentiment word (or sentence start) and the word itself.
    """
    total = 0.0
    window_start = 0
    for pos, token in enumerate(tokens):
        weight = lex.sentiment.get(token)
        if weight is None:
            continue
        contribution = weight
        negations = 0
        for modifier in tokens[window_start:pos]:
            cat = lex.degree.get(modifier)
            if cat is not None:
                contribution *= lex.multipliers[cat]
            elif modifier in lex.negation:
                negations += 1
        if negations % 2:
            contribution = -contribution
        total += contribution
        window_start = pos + 1
    return total


def default_vocab(lex: Lexicons, extra_words: Iterable[str] = ()) -> SegmenterVocab:
    """Segmenter vocabulary covering every dictionary term plus extras."""
    words = set(lex.sentiment) | set(lex.degree) | set(lex.negation) | set(lex.stopwords)
    words.update(extra_words)
    return SegmenterVocab(words)


def score_document(text: str, lex: Lexicons, vocab: SegmenterVocab | None = None) -> SentimentResult:
    """Split, tokenize, filter stopwords, and score each sentence.

    The label is positive only for a strictly positive score; a zero score is
    negative by the scorer's tie rule.
    """
    if vocab is None:
        vocab = default_vocab(lex)
    exempt = lex.modifier_words
    per_sentence = []
    total = 0.0
    for sentence in split_sentences(text):
        tokens = remove_stopwords(tokenize(sentence, vocab), lex.stopwords, exempt)
        s = score_sentence(tokens, lex)
        per_sentence.append((sentence, s))
        total += s
    label = "positive" if total > 0 else "negative"
    return SentimentResult(score=total, label=label, per_sentence=tuple(per_sentence))
