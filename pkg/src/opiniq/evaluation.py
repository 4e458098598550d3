"""Confusion counting, precision/recall/F1, and stratified dataset splits."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, TypeVar

import numpy as np

POSITIVE = "positive"
NEGATIVE = "negative"

T = TypeVar("T")


@dataclass(frozen=True)
class ConfusionCounts:
    tp: int
    fp: int
    fn: int
    tn: int

    @property
    def total(self) -> int:
        return self.tp + self.fp + self.fn + self.tn

    def to_jsonable(self) -> dict:
        return {"tp": self.tp, "fp": self.fp, "fn": self.fn, "tn": self.tn}


def confusion(predicted: Sequence[str], truth: Sequence[str]) -> ConfusionCounts:
    """Count tp/fp/fn/tn with 'positive' as the target class."""
    if len(predicted) != len(truth):
        raise ValueError(f"length mismatch: {len(predicted)} predictions vs {len(truth)} labels")
    if not truth:
        raise ValueError("cannot evaluate an empty sample")
    tp = fp = fn = tn = 0
    for p, t in zip(predicted, truth):
        if p == POSITIVE:
            if t == POSITIVE:
                tp += 1
            else:
                fp += 1
        else:
            if t == POSITIVE:
                fn += 1
            else:
                tn += 1
    return ConfusionCounts(tp=tp, fp=fp, fn=fn, tn=tn)


def metrics(c: ConfusionCounts) -> dict[str, float]:
    """Precision, recall, and F1. A 0/0 ratio is defined as 0.0."""
    precision = c.tp / (c.tp + c.fp) if (c.tp + c.fp) else 0.0
    recall = c.tp / (c.tp + c.fn) if (c.tp + c.fn) else 0.0
    denom = 2 * c.tp + c.fp + c.fn
    f1 = 2 * c.tp / denom if denom else 0.0
    return {"precision": precision, "recall": recall, "f1": f1}


def evaluation_report(predicted: Sequence[str], truth: Sequence[str]) -> dict:
    c = confusion(predicted, truth)
    return {"counts": c.to_jsonable(), **metrics(c)}


def split_dataset(
    docs: Sequence[T],
    labels: Sequence[str],
    test_fraction: float,
    seed: int,
) -> tuple[list[T], list[T]]:
    """Seeded stratified split into (train, test).

    Each class is shuffled independently and contributes round(n * fraction)
    samples to the test split, clamped so both splits keep at least one
    sample per class. Classes with fewer than 2 samples are an error.
    """
    if not 0 < test_fraction < 1:
        raise ValueError(f"test_fraction must be in (0, 1), got {test_fraction}")
    if len(docs) != len(labels):
        raise ValueError("docs and labels must have equal length")
    by_class: dict[str, list[int]] = {}
    for i, label in enumerate(labels):
        by_class.setdefault(label, []).append(i)
    for label, idxs in by_class.items():
        if len(idxs) < 2:
            raise ValueError(f"class {label!r} has fewer than 2 samples")
    rng = np.random.default_rng(seed)
    test_idx: list[int] = []
    train_idx: list[int] = []
    for label in sorted(by_class):
        idxs = np.array(by_class[label])
        rng.shuffle(idxs)
        n_test = int(round(len(idxs) * test_fraction))
        n_test = min(max(n_test, 1), len(idxs) - 1)
        test_idx.extend(idxs[:n_test].tolist())
        train_idx.extend(idxs[n_test:].tolist())
    train_idx.sort()
    test_idx.sort()
    return [docs[i] for i in train_idx], [docs[i] for i in test_idx]
