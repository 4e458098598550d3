"""Document enrichment: gazetteer region extraction and TextRank.

Region extraction scans the raw text with leftmost-longest matching over
gazetteer names, so a place name is never hidden by segmentation errors.
TextRank runs PageRank over a token co-occurrence graph for keywords and
over a sentence-similarity graph for the abstract.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import log
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .segment import SegmenterVocab, split_sentences, tokenize

GAZETTEER_LEVELS = ("province", "city", "county")

PAGERANK_DAMPING = 0.85
PAGERANK_TOL = 1e-6
PAGERANK_MAX_ITER = 200
COOCCURRENCE_WINDOW = 4


@dataclass(frozen=True)
class GazetteerEntry:
    name: str
    level: str
    province_code: str


class Gazetteer:
    """Place-name dictionary indexed for longest-match scanning.

    A name appearing at several levels resolves to the highest one
    (province before city before county).
    """

    def __init__(self, entries: Iterable[GazetteerEntry]):
        self.entries: list[GazetteerEntry] = []
        self._by_name: dict[str, GazetteerEntry] = {}
        seen: set[tuple[str, str]] = set()
        rank = {lvl: i for i, lvl in enumerate(GAZETTEER_LEVELS)}
        for e in entries:
            if not e.name:
                raise ValueError("gazetteer names must be non-empty")
            if e.level not in GAZETTEER_LEVELS:
                raise ValueError(f"unknown gazetteer level {e.level!r} for {e.name!r}")
            if (e.name, e.level) in seen:
                raise ValueError(f"duplicate gazetteer entry {e.name!r} at level {e.level!r}")
            seen.add((e.name, e.level))
            self.entries.append(e)
            current = self._by_name.get(e.name)
            if current is None or rank[e.level] < rank[current.level]:
                self._by_name[e.name] = e
        self.max_name_len = max((len(e.name) for e in self.entries), default=1)
        self._names = frozenset(self._by_name)

    def names(self) -> frozenset[str]:
        return self._names

    def lookup(self, name: str) -> GazetteerEntry | None:
        return self._by_name.get(name)

    @classmethod
    def load(cls, path: str | Path) -> "Gazetteer":
        """CSV ``name,level,province_code``, optional header, UTF-8."""
        entries = []
        for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if line.replace(" ", "") == "name,level,province_code":
                continue
            parts = [p.strip() for p in line.split(",")]
            if len(parts) != 3:
                raise ValueError(f"{path}:{lineno}: expected 'name,level,province_code'")
            entries.append(GazetteerEntry(name=parts[0], level=parts[1], province_code=parts[2]))
        return cls(entries)


@dataclass(frozen=True)
class RegionMention:
    name: str
    province_code: str
    offset: int


@dataclass(frozen=True)
class RegionExtraction:
    mentions: tuple[RegionMention, ...]
    primary: str | None


def extract_regions(text: str, gaz: Gazetteer) -> RegionExtraction:
    """Leftmost-longest scan for gazetteer names; majority province wins.

    Ties on the mention count go to the province mentioned earliest.
    """
    mentions = []
    names = gaz.names()
    n = len(text)
    i = 0
    while i < n:
        match = None
        for length in range(min(gaz.max_name_len, n - i), 0, -1):
            candidate = text[i : i + length]
            if candidate in names:
                match = candidate
                break
        if match is None:
            i += 1
            continue
        entry = gaz.lookup(match)
        mentions.append(RegionMention(name=match, province_code=entry.province_code, offset=i))
        i += len(match)

    if not mentions:
        return RegionExtraction(mentions=(), primary=None)
    counts: dict[str, int] = {}
    first_seen: dict[str, int] = {}
    for m in mentions:
        counts[m.province_code] = counts.get(m.province_code, 0) + 1
        first_seen.setdefault(m.province_code, m.offset)
    primary = min(counts, key=lambda code: (-counts[code], first_seen[code]))
    return RegionExtraction(mentions=tuple(mentions), primary=primary)


def pagerank(
    weights: Mapping[int, Mapping[int, float]],
    n_nodes: int,
    damping: float = PAGERANK_DAMPING,
    tol: float = PAGERANK_TOL,
    max_iter: int = PAGERANK_MAX_ITER,
) -> tuple[list[float], int]:
    """Weighted PageRank over an undirected graph given as adjacency maps.

    Uses the classical non-normalized recurrence
    ``s_i = (1 - damping) + damping * sum_j w_ij / W_j * s_j`` where W_j is
    the weighted degree of j. Isolated nodes settle at ``1 - damping``.
    Returns (scores, iterations); raises if convergence is not reached.
    """
    scores = [1.0] * n_nodes
    degree = [sum(weights.get(j, {}).values()) for j in range(n_nodes)]
    for iteration in range(1, max_iter + 1):
        new_scores = []
        for i in range(n_nodes):
            acc = 0.0
            for j, w in weights.get(i, {}).items():
                if degree[j] > 0:
                    acc += w / degree[j] * scores[j]
            new_scores.append((1.0 - damping) + damping * acc)
        delta = max(abs(a - b) for a, b in zip(new_scores, scores))
        scores = new_scores
        if delta < tol:
            return scores, iteration
    raise RuntimeError(f"PageRank did not converge within {max_iter} iterations")


def normalize_scores(scores: Sequence[float]) -> list[float]:
    total = sum(scores)
    if total <= 0:
        return [0.0 for _ in scores]
    return [s / total for s in scores]


def is_content_token(token: str, stopwords: frozenset[str] | set[str]) -> bool:
    """Keyword candidates: not a stopword and carrying at least one alphanumeric."""
    return token not in stopwords and any(ch.isalnum() for ch in token)


def _content_tokens(
    text: str, vocab: SegmenterVocab, stopwords: frozenset[str] | set[str]
) -> list[list[str]]:
    per_sentence = []
    for sentence in split_sentences(text):
        tokens = [t for t in tokenize(sentence, vocab) if is_content_token(t, stopwords)]
        per_sentence.append(tokens)
    return per_sentence


def textrank_keywords(
    text: str,
    k: int,
    window: int = COOCCURRENCE_WINDOW,
    vocab: SegmenterVocab | None = None,
    stopwords: frozenset[str] | set[str] = frozenset(),
) -> list[tuple[str, float]]:
    """Top-k tokens by PageRank over the co-occurrence graph.

    Nodes are distinct content tokens; an edge links two distinct tokens
    co-occurring within ``window`` positions of the filtered token sequence
    of a sentence. Returned scores are normalized to sum to 1; ties rank
    lexicographically.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if vocab is None:
        vocab = SegmenterVocab(())
    sentences = _content_tokens(text, vocab, stopwords)
    index: dict[str, int] = {}
    for tokens in sentences:
        for t in tokens:
            index.setdefault(t, len(index))
    if not index:
        return []
    adj: dict[int, dict[int, float]] = {i: {} for i in range(len(index))}
    for tokens in sentences:
        for i, a in enumerate(tokens):
            for b in tokens[i + 1 : i + window]:
                if a == b:
                    continue
                ia, ib = index[a], index[b]
                adj[ia][ib] = 1.0
                adj[ib][ia] = 1.0
    scores, _ = pagerank(adj, len(index))
    norm = normalize_scores(scores)
    ranked = sorted(index, key=lambda t: (-norm[index[t]], t))
    return [(t, norm[index[t]]) for t in ranked[:k]]


def textrank_abstract(
    text: str,
    n: int,
    vocab: SegmenterVocab | None = None,
    stopwords: frozenset[str] | set[str] = frozenset(),
) -> list[str]:
    """Top-n sentences by PageRank over token-overlap similarity, in document order.

    Edge weight between two sentences is the count of shared distinct content
    tokens divided by ``log(1 + len_i) + log(1 + len_j)`` (token counts); it
    is 0 when either sentence has no content tokens.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if vocab is None:
        vocab = SegmenterVocab(())
    sentences = split_sentences(text)
    if not sentences:
        return []
    token_sets = []
    lengths = []
    for sentence in sentences:
        tokens = [t for t in tokenize(sentence, vocab) if is_content_token(t, stopwords)]
        token_sets.append(set(tokens))
        lengths.append(len(tokens))
    adj: dict[int, dict[int, float]] = {i: {} for i in range(len(sentences))}
    for i in range(len(sentences)):
        for j in range(i + 1, len(sentences)):
            if lengths[i] == 0 or lengths[j] == 0:
                continue
            shared = len(token_sets[i] & token_sets[j])
            if shared == 0:
                continue
            w = shared / (log(1 + lengths[i]) + log(1 + lengths[j]))
            adj[i][j] = w
            adj[j][i] = w
    scores, _ = pagerank(adj, len(sentences))
    order = sorted(range(len(sentences)), key=lambda i: (-scores[i], i))
    chosen = sorted(order[:n])
    return [sentences[i].strip() for i in chosen]


@dataclass(frozen=True)
class KeywordResult:
    keywords: tuple[tuple[str, float], ...]
    abstract: tuple[str, ...]
