"""Sentence splitting and dictionary-based word segmentation.

Segmentation is greedy forward maximum matching over a fixed vocabulary:
at each position the longest dictionary word starting there is emitted,
falling back to a single character. This keeps tokenization deterministic
and lossless (the concatenation of tokens reproduces the input exactly),
which is what the lexicon scorer and TextRank need.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable

SENTENCE_DELIMITERS = frozenset("。！？!?.\n")  # 。！？!?. and newline


class SegmenterVocab:
    """Immutable word list with the longest entry length precomputed."""

    __slots__ = ("words", "max_word_len")

    def __init__(self, words: Iterable[str]):
        self.words = frozenset(w for w in words if w)
        self.max_word_len = max((len(w) for w in self.words), default=1)

    def __len__(self) -> int:
        return len(self.words)

    def __contains__(self, word: str) -> bool:
        return word in self.words

    @classmethod
    def load(cls, path: str | Path) -> "SegmenterVocab":
        """Read one word per line, UTF-8; blank lines ignored."""
        lines = Path(path).read_text(encoding="utf-8").splitlines()
        return cls(line.strip() for line in lines if line.strip())

    def save(self, path: str | Path) -> None:
        Path(path).write_text(
            "\n".join(sorted(self.words)) + "\n" if self.words else "", encoding="utf-8"
        )


def split_sentences(text: str) -> list[str]:
    """Split on sentence-final punctuation and newlines, keeping the delimiter.

    Fragments whose content (before the delimiter) is empty or whitespace are
    dropped, so repeated delimiters do not yield empty sentences.
    """
    sentences = []
    start = 0
    for i, ch in enumerate(text):
        if ch in SENTENCE_DELIMITERS:
            if text[start:i].strip():
                sentences.append(text[start : i + 1].lstrip())
            start = i + 1
    if text[start:].strip():
        sentences.append(text[start:].strip())
    return sentences


def tokenize(sentence: str, vocab: SegmenterVocab) -> list[str]:
    """Greedy forward longest-match tokenization; lossless by construction."""
    tokens = []
    words = vocab.words
    n = len(sentence)
    i = 0
    while i < n:
        match = None
        for length in range(min(vocab.max_word_len, n - i), 1, -1):
            candidate = sentence[i : i + length]
            if candidate in words:
                match = candidate
                break
        if match is None:
            match = sentence[i]
        tokens.append(match)
        i += len(match)
    return tokens


def remove_stopwords(
    tokens: Iterable[str], stopwords: frozenset[str] | set[str], exempt: frozenset[str] | set[str] = frozenset()
) -> list[str]:
    """Drop stopword tokens unless exempt (negation/degree words stay)."""
    return [t for t in tokens if t not in stopwords or t in exempt]
