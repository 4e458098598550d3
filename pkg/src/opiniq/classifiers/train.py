"""Training, prediction, and gradient auditing for the three classifiers.

Everything is plain mini-batch SGD with a seeded generator: same data plus
same seed gives bitwise-identical models. Sequence models consume embedded
token matrices truncated to max_seq_len with no padding; the pooled models
consume mean document vectors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .. import _kernels
from ..embeddings import EmbeddingModel, TrainingDiverged, embed_document
from ..segment import SegmenterVocab, tokenize
from ..store import clean_text
from . import lstm as lstm_mod
from . import mlp as mlp_mod
from . import svm as svm_mod
from ._common import log_loss, sigmoid_scalar

CLASSIFIER_KINDS = ("mlp", "lstm", "svm")
LABELS = ("positive", "negative")


@dataclass(frozen=True)
class TrainConfig:
    """Settings shared by all three classifier kinds."""

    classifier_kind: str = "lstm"
    epochs: int = 10
    learning_rate: float = 0.1
    batch_size: int = 32
    max_seq_len: int = 200
    hidden_size: int = 16
    seed: int = 0
    svm_regularization: float = 1e-3

    def validate(self) -> None:
        if self.classifier_kind not in CLASSIFIER_KINDS:
            raise ValueError(f"classifier_kind must be one of {CLASSIFIER_KINDS}")
        if self.epochs < 0:
            raise ValueError("epochs must not be negative")
        if not (self.learning_rate > 0 and math.isfinite(self.learning_rate)):
            raise ValueError("learning_rate must be positive and finite")
        if self.batch_size < 1:
            raise ValueError("batch_size must be at least 1")
        if self.max_seq_len < 1:
            raise ValueError("max_seq_len must be at least 1")
        if self.hidden_size < 1:
            raise ValueError("hidden_size must be at least 1")
        if not (self.svm_regularization > 0 and math.isfinite(self.svm_regularization)):
            raise ValueError("svm_regularization must be positive and finite")


@dataclass
class ClassifierModel:
    """A trained classifier plus the context needed to apply it."""

    kind: str
    params: object
    input_dim: int
    max_seq_len: int
    epoch_losses: list[float] = field(default_factory=list)


def _embed_sequence(
    tokens: Sequence[str], embeddings: EmbeddingModel, max_seq_len: int
) -> np.ndarray:
    rows = [embeddings.vector(t) for t in tokens[:max_seq_len]]
    return np.ascontiguousarray(
        np.array(rows, dtype=float).reshape(len(rows), embeddings.dim)
    )


def _lstm_batch_grads(
    p: lstm_mod.LSTMParams, seqs: list[np.ndarray], ys: np.ndarray
) -> tuple[float, dict[str, np.ndarray]]:
    grads = {name: np.zeros_like(arr) for name, arr in p.items()}
    B = len(seqs)
    probs = np.empty(B)
    for idx, X in enumerate(seqs):
        if X.shape[0] == 0:
            trace = None
            h_last = np.zeros(p.hidden_size)
        else:
            trace = lstm_mod.sequence_trace(X, p)
            h_last = trace[5][-1]
        z = float(p.w_out @ h_last + p.b_out[0])
        prob = sigmoid_scalar(z)
        probs[idx] = prob
        dz = (prob - ys[idx]) / B
        grads["w_out"] += dz * h_last
        grads["b_out"][0] += dz
        if trace is not None:
            I, F, O, G, C, Hs = trace
            back = _kernels.lstm_seq_backward(
                X, I, F, O, G, C, Hs, dz * p.w_out,
                p.W_hi, p.W_hf, p.W_ho, p.W_hc, p.w_ci, p.w_cf, p.w_co,
            )
            for name, val in back.items():
                grads[name] += val
    return log_loss(probs, ys), grads


def train(
    dataset: Sequence[tuple[Sequence[str], str]],
    embeddings: EmbeddingModel,
    config: TrainConfig | None = None,
) -> ClassifierModel:
    """Fit a classifier on (tokens, label) pairs.

    Labels must be the strings "positive" / "negative" and both classes must
    appear. Returns the model with its per-epoch mean training loss; raises
    TrainingDiverged if the loss goes non-finite.
    """
    cfg = config or TrainConfig()
    cfg.validate()
    if not dataset:
        raise ValueError("dataset is empty")
    for _, label in dataset:
        if label not in LABELS:
            raise ValueError(f"unknown label {label!r}")
    present = {label for _, label in dataset}
    if len(present) < 2:
        raise ValueError("dataset must contain both classes")

    rng = np.random.default_rng(cfg.seed)
    n = len(dataset)
    kind = cfg.classifier_kind
    y01 = np.array([1.0 if label == "positive" else 0.0 for _, label in dataset])

    if kind == "lstm":
        seqs = [_embed_sequence(toks, embeddings, cfg.max_seq_len) for toks, _ in dataset]
        params: object = lstm_mod.init_lstm(embeddings.dim, cfg.hidden_size, rng)
    else:
        X = np.array([embed_document(toks, embeddings) for toks, _ in dataset])
        if kind == "mlp":
            params = mlp_mod.init_mlp([embeddings.dim, cfg.hidden_size, 1], rng)
        else:
            params = svm_mod.init_svm(embeddings.dim, rng)
    y_svm = 2.0 * y01 - 1.0

    losses: list[float] = []
    for _ in range(cfg.epochs):
        perm = rng.permutation(n)
        epoch_loss = 0.0
        for start in range(0, n, cfg.batch_size):
            idx = perm[start : start + cfg.batch_size]
            if kind == "lstm":
                batch_loss, grads = _lstm_batch_grads(
                    params, [seqs[i] for i in idx], y01[idx]
                )
                for name, g in grads.items():
                    arr = getattr(params, name)
                    arr -= cfg.learning_rate * g
            elif kind == "mlp":
                batch_loss, grads = mlp_mod.batch_grads(params, X[idx], y01[idx])
                for i in range(len(params.weights)):
                    params.weights[i] -= cfg.learning_rate * grads[f"W{i}"]
                    params.biases[i] -= cfg.learning_rate * grads[f"b{i}"]
            else:
                batch_loss = svm_mod.batch_step(
                    params, X[idx], y_svm[idx], cfg.svm_regularization, cfg.learning_rate
                )
            if not math.isfinite(batch_loss):
                raise TrainingDiverged(
                    "training loss is not finite; lower the learning rate"
                )
            epoch_loss += batch_loss * len(idx)
        losses.append(epoch_loss / n)
    return ClassifierModel(
        kind=kind,
        params=params,
        input_dim=embeddings.dim,
        max_seq_len=cfg.max_seq_len,
        epoch_losses=losses,
    )


def predict_tokens(
    tokens: Sequence[str], model: ClassifierModel, embeddings: EmbeddingModel
) -> dict:
    """Label a token sequence; value is a probability or a raw margin."""
    if model.kind == "lstm":
        value = lstm_mod.lstm_forward(
            tokens, embeddings, model.params, model.max_seq_len
        )
        positive = value >= 0.5
    elif model.kind == "mlp":
        value = mlp_mod.mlp_forward(embed_document(tokens, embeddings), model.params)
        positive = value >= 0.5
    elif model.kind == "svm":
        value = svm_mod.margin(embed_document(tokens, embeddings), model.params)
        positive = value >= 0.0
    else:
        raise ValueError(f"unknown classifier kind {model.kind!r}")
    return {
        "label": "positive" if positive else "negative",
        "value": float(value),
        "kind": model.kind,
    }


def predict(
    text: str,
    model: ClassifierModel,
    embeddings: EmbeddingModel,
    vocab: SegmenterVocab,
) -> dict:
    """Clean and tokenize raw text, then label it."""
    return predict_tokens(tokenize(clean_text(text), vocab), model, embeddings)


def gradient_check(model_kind: str, params, sample, step: float = 1e-5) -> float:
    """Max relative error between analytic and central-difference gradients.

    sample is (X, y) with X a (T, d) sequence for the recurrent model or a
    (d,) vector for the feed-forward one. Relative error is
    |g_a - g_n| / max(1e-8, |g_a| + |g_n|), taken over every coordinate of
    every parameter.
    """
    if model_kind == "lstm":
        X = np.ascontiguousarray(np.asarray(sample[0], dtype=float))
        y = float(sample[1])

        def loss_fn() -> float:
            return log_loss(
                np.array([lstm_mod.lstm_probability(X, params)]), np.array([y])
            )

        _, analytic = _lstm_batch_grads(params, [X], np.array([y]))
    elif model_kind == "mlp":
        x = np.asarray(sample[0], dtype=float)
        y = float(sample[1])

        def loss_fn() -> float:
            return log_loss(
                np.array([mlp_mod.mlp_forward(x, params)]), np.array([y])
            )

        _, analytic = mlp_mod.batch_grads(params, x[None, :], np.array([y]))
    else:
        raise ValueError("gradient_check supports the mlp and lstm kinds")

    worst = 0.0
    for name, arr in params.items():
        ga = np.asarray(analytic[name])
        for idx in np.ndindex(arr.shape):
            orig = arr[idx]
            arr[idx] = orig + step
            plus = loss_fn()
            arr[idx] = orig - step
            minus = loss_fn()
            arr[idx] = orig
            gn = (plus - minus) / (2.0 * step)
            rel = abs(float(ga[idx]) - gn) / max(1e-8, abs(float(ga[idx])) + abs(gn))
            worst = max(worst, rel)
    return worst
