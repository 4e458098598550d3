"""Skip-gram word embeddings with negative sampling.

Training runs over (center, context) pairs from a fixed-size symmetric
window. Negative targets are drawn from the unigram distribution raised to
the 0.75 power; a draw that hits the true context is skipped rather than
resampled. The learning rate decays linearly over all scheduled updates
down to a floor of 1e-4 times the starting rate. All randomness comes from
one seeded generator so runs are reproducible; the per-pair arithmetic
lives in the kernel backends.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np

from . import _kernels

LR_FLOOR_FACTOR = 1e-4


class EmbeddingError(ValueError):
    """Invalid embedding configuration, input, or model file."""


class TrainingDiverged(RuntimeError):
    """Loss or parameters stopped being finite during training."""


@dataclass(frozen=True)
class EmbedTrainConfig:
    """Skip-gram training settings."""

    dim: int = 100
    window: int = 5
    negatives: int = 5
    epochs: int = 5
    learning_rate: float = 0.025
    min_count: int = 1
    seed: int = 0

    def validate(self) -> None:
        if self.dim < 2:
            raise EmbeddingError("dim must be at least 2")
        if self.window < 1:
            raise EmbeddingError("window must be at least 1")
        if self.negatives < 1:
            raise EmbeddingError("negatives must be at least 1")
        if self.epochs < 0:
            raise EmbeddingError("epochs must not be negative")
        if not (self.learning_rate > 0 and math.isfinite(self.learning_rate)):
            raise EmbeddingError("learning_rate must be positive and finite")
        if self.min_count < 1:
            raise EmbeddingError("min_count must be at least 1")


class EmbeddingModel:
    """A trained vocabulary-to-vector table.

    Lookup of a word outside the vocabulary yields the zero vector; cosine
    similarity, which would be undefined there, raises instead.
    """

    def __init__(
        self,
        vocab: Mapping[str, int],
        vectors: np.ndarray,
        epoch_losses: Sequence[float] = (),
    ):
        vectors = np.asarray(vectors, dtype=float)
        if vectors.ndim != 2:
            raise EmbeddingError("vectors must be a 2-d array")
        if len(vocab) != vectors.shape[0]:
            raise EmbeddingError(
                f"vocab has {len(vocab)} words but vectors has {vectors.shape[0]} rows"
            )
        if sorted(vocab.values()) != list(range(len(vocab))):
            raise EmbeddingError("vocab indices must be exactly 0..V-1")
        if not np.isfinite(vectors).all():
            raise EmbeddingError("vectors contain non-finite values")
        self.vocab = dict(vocab)
        self.vectors = vectors
        self.epoch_losses = list(epoch_losses)

    @property
    def dim(self) -> int:
        return int(self.vectors.shape[1])

    def __contains__(self, word: str) -> bool:
        return word in self.vocab

    def __len__(self) -> int:
        return len(self.vocab)

    def vector(self, word: str) -> np.ndarray:
        """The word's vector, or the zero vector when out of vocabulary."""
        idx = self.vocab.get(word)
        if idx is None:
            return np.zeros(self.dim)
        return self.vectors[idx].copy()

    def cosine(self, a: str, b: str) -> float:
        """Cosine similarity between two in-vocabulary words."""
        for word in (a, b):
            if word not in self.vocab:
                raise EmbeddingError(f"word not in vocabulary: {word!r}")
        va = self.vectors[self.vocab[a]]
        vb = self.vectors[self.vocab[b]]
        denom = float(np.linalg.norm(va) * np.linalg.norm(vb))
        if denom == 0.0:
            raise EmbeddingError("cosine undefined for a zero vector")
        return float(va @ vb / denom)

    def save(self, path) -> None:
        """Write the table as text: a 'V dim' header, then 'word v1 .. vd' rows."""
        order = sorted(self.vocab, key=self.vocab.__getitem__)
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(f"{len(order)} {self.dim}\n")
            for word in order:
                row = self.vectors[self.vocab[word]]
                fh.write(word + " " + " ".join(repr(float(v)) for v in row) + "\n")

    @classmethod
    def load(cls, path) -> "EmbeddingModel":
        with open(path, "r", encoding="utf-8") as fh:
            header = fh.readline().split()
            if len(header) != 2:
                raise EmbeddingError(f"bad embedding file header in {path}")
            try:
                count, dim = int(header[0]), int(header[1])
            except ValueError as exc:
                raise EmbeddingError(f"bad embedding file header in {path}") from exc
            vocab: dict[str, int] = {}
            vectors = np.empty((count, dim))
            for i in range(count):
                parts = fh.readline().rstrip("\n").split(" ")
                if len(parts) != dim + 1:
                    raise EmbeddingError(f"bad embedding row {i} in {path}")
                word = parts[0]
                if word in vocab:
                    raise EmbeddingError(f"duplicate word {word!r} in {path}")
                vocab[word] = i
                vectors[i] = [float(v) for v in parts[1:]]
        return cls(vocab, vectors)


def build_vocab(
    sentences: Iterable[Sequence[str]], min_count: int = 1
) -> tuple[dict[str, int], np.ndarray]:
    """Map words to indices by descending frequency, ties lexicographic.

    Returns the index map and the matching frequency array. Words seen fewer
    than min_count times are dropped.
    """
    counts: dict[str, int] = {}
    for sentence in sentences:
        for word in sentence:
            counts[word] = counts.get(word, 0) + 1
    kept = [(word, c) for word, c in counts.items() if c >= min_count]
    kept.sort(key=lambda item: (-item[1], item[0]))
    vocab = {word: i for i, (word, _) in enumerate(kept)}
    freqs = np.array([c for _, c in kept], dtype=float)
    return vocab, freqs


def _noise_cdf(freqs: np.ndarray) -> np.ndarray:
    weights = freqs**0.75
    cdf = np.cumsum(weights / weights.sum())
    cdf[-1] = 1.0
    return cdf


def _collect_pairs(
    sentences: Iterable[Sequence[str]], vocab: Mapping[str, int], window: int
) -> tuple[np.ndarray, np.ndarray]:
    centers: list[int] = []
    contexts: list[int] = []
    for sentence in sentences:
        seq = [vocab[w] for w in sentence if w in vocab]
        n = len(seq)
        for pos, center in enumerate(seq):
            lo = max(0, pos - window)
            hi = min(n, pos + window + 1)
            for other in range(lo, hi):
                if other != pos:
                    centers.append(center)
                    contexts.append(seq[other])
    return (
        np.asarray(centers, dtype=np.int64),
        np.asarray(contexts, dtype=np.int64),
    )


def train_skipgram(
    sentences: Sequence[Sequence[str]], config: EmbedTrainConfig | None = None
) -> EmbeddingModel:
    """Train embeddings over tokenized sentences.

    Input vectors start at uniform(-0.5/dim, +0.5/dim), context vectors at
    zero. Every epoch walks the full pair list in a fresh shuffled order.
    Raises TrainingDiverged if the loss or the table goes non-finite.
    """
    cfg = config or EmbedTrainConfig()
    cfg.validate()
    vocab, freqs = build_vocab(sentences, cfg.min_count)
    if not vocab:
        raise EmbeddingError("no words survive min_count; nothing to train")
    rng = np.random.default_rng(cfg.seed)
    vectors = (rng.random((len(vocab), cfg.dim)) - 0.5) / cfg.dim
    ctx = np.zeros((len(vocab), cfg.dim))
    centers, contexts = _collect_pairs(sentences, vocab, cfg.window)
    n_pairs = centers.shape[0]
    if n_pairs == 0:
        return EmbeddingModel(vocab, vectors, epoch_losses=[0.0] * cfg.epochs)
    cdf = _noise_cdf(freqs)
    total_updates = n_pairs * cfg.epochs
    losses: list[float] = []
    done = 0
    for _ in range(cfg.epochs):
        order = rng.permutation(n_pairs)
        draws = rng.random((n_pairs, cfg.negatives))
        negatives = np.minimum(
            np.searchsorted(cdf, draws, side="right"), len(vocab) - 1
        ).astype(np.int64)
        progress = (done + np.arange(n_pairs, dtype=float)) / total_updates
        lrs = np.maximum(
            cfg.learning_rate * (1.0 - progress),
            cfg.learning_rate * LR_FLOOR_FACTOR,
        )
        loss = _kernels.sg_update_pairs(
            vectors,
            ctx,
            np.ascontiguousarray(centers[order]),
            np.ascontiguousarray(contexts[order]),
            np.ascontiguousarray(negatives),
            lrs,
        )
        if not math.isfinite(loss):
            raise TrainingDiverged("skip-gram loss is not finite")
        losses.append(loss / n_pairs)
        done += n_pairs
    if not np.isfinite(vectors).all():
        raise TrainingDiverged("embedding table is not finite after training")
    return EmbeddingModel(vocab, vectors, epoch_losses=losses)


def embed_document(tokens: Sequence[str], model: EmbeddingModel) -> np.ndarray:
    """Mean of the in-vocabulary token vectors; zero vector if none qualify."""
    rows = [model.vocab[t] for t in tokens if t in model.vocab]
    if not rows:
        return np.zeros(model.dim)
    return model.vectors[rows].mean(axis=0)
