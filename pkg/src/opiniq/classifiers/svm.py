"""Linear soft-margin baseline over mean-pooled document vectors.

Trained by mini-batch subgradient descent on the L2-regularized hinge loss.
The decision value is the raw margin w.x + b; labels are in {-1, +1}
internally and non-negative margin maps to the positive class.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass
class SVMParams:
    """Weight vector and intercept."""

    w: np.ndarray
    b: float

    @property
    def input_dim(self) -> int:
        return int(self.w.shape[0])

    def items(self):
        return [("w", self.w), ("b", np.array([self.b]))]

    def validate(self) -> None:
        if self.w.ndim != 1 or self.w.shape[0] < 1:
            raise ValueError("w must be a non-empty vector")
        if not (np.isfinite(self.w).all() and np.isfinite(self.b)):
            raise ValueError("parameters contain non-finite values")

    def copy(self) -> "SVMParams":
        return SVMParams(self.w.copy(), float(self.b))


def init_svm(input_dim: int, rng: np.random.Generator) -> SVMParams:
    """Fan-in-scaled uniform weights, zero intercept."""
    if input_dim < 1:
        raise ValueError("input_dim must be positive")
    bound = 1.0 / np.sqrt(input_dim)
    return SVMParams(rng.uniform(-bound, bound, size=input_dim), 0.0)


def margin(x: np.ndarray, p: SVMParams) -> float:
    """Signed distance proxy w.x + b for one document vector."""
    x = np.asarray(x, dtype=float)
    if x.shape != (p.input_dim,):
        raise ValueError(f"input has shape {x.shape}, expected ({p.input_dim},)")
    return float(p.w @ x + p.b)


def batch_step(
    p: SVMParams, X: np.ndarray, y: np.ndarray, lam: float, lr: float
) -> float:
    """One subgradient step in place; returns the batch objective.

    y holds {-1, +1} labels. The objective is lam/2 ||w||^2 plus the mean
    hinge loss; only margin violators contribute to the data term.
    """
    X = np.asarray(X, dtype=float)
    y = np.asarray(y, dtype=float)
    B = X.shape[0]
    with np.errstate(over="ignore", invalid="ignore"):
        margins = X @ p.w + p.b
        slack = 1.0 - y * margins
        viol = slack > 0.0
        loss = 0.5 * lam * float(p.w @ p.w) + float(np.maximum(slack, 0.0).mean())
        grad_w = lam * p.w
        grad_b = 0.0
        if viol.any():
            grad_w = grad_w - (y[viol, None] * X[viol]).sum(axis=0) / B
            grad_b = -float(y[viol].sum()) / B
        p.w -= lr * grad_w
        p.b -= lr * grad_b
    return float(loss)
