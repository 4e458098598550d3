"""Feed-forward binary classifier over mean-pooled document vectors.

Hidden layers use tanh; the single output unit is a logistic sigmoid. Layer
sizes run [d, h1, ..., 1]; a two-entry size list is a plain logistic
regression with no hidden layer.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ._common import clamp_probability, log_loss, sigmoid


@dataclass
class MLPParams:
    """Per-layer weight matrices (out, in) and bias vectors."""

    weights: list[np.ndarray]
    biases: list[np.ndarray]

    @property
    def sizes(self) -> list[int]:
        return [int(self.weights[0].shape[1])] + [int(w.shape[0]) for w in self.weights]

    @property
    def input_dim(self) -> int:
        return int(self.weights[0].shape[1])

    def items(self):
        """(name, array) pairs, W0, b0, W1, b1, ..."""
        out = []
        for i, (w, b) in enumerate(zip(self.weights, self.biases)):
            out.append((f"W{i}", w))
            out.append((f"b{i}", b))
        return out

    def validate(self) -> None:
        if not self.weights or len(self.weights) != len(self.biases):
            raise ValueError("weights and biases must be non-empty and parallel")
        if self.weights[-1].shape[0] != 1:
            raise ValueError("final layer must have exactly one output unit")
        prev = self.weights[0].shape[1]
        for i, (w, b) in enumerate(zip(self.weights, self.biases)):
            if w.ndim != 2 or b.ndim != 1:
                raise ValueError(f"layer {i} arrays have wrong rank")
            if w.shape[1] != prev or b.shape[0] != w.shape[0]:
                raise ValueError(f"layer {i} dimensions are inconsistent")
            if not (np.isfinite(w).all() and np.isfinite(b).all()):
                raise ValueError(f"layer {i} contains non-finite values")
            prev = w.shape[0]

    def copy(self) -> "MLPParams":
        return MLPParams(
            [w.copy() for w in self.weights], [b.copy() for b in self.biases]
        )


def init_mlp(sizes: Sequence[int], rng: np.random.Generator) -> MLPParams:
    """Fan-in-scaled uniform weights, zero biases, for sizes [d, ..., 1]."""
    sizes = [int(s) for s in sizes]
    if len(sizes) < 2:
        raise ValueError("need at least input and output layer sizes")
    if sizes[-1] != 1:
        raise ValueError("output layer size must be 1")
    if any(s < 1 for s in sizes):
        raise ValueError("layer sizes must be positive")
    weights = []
    biases = []
    for fan_in, fan_out in zip(sizes, sizes[1:]):
        bound = 1.0 / np.sqrt(fan_in)
        weights.append(rng.uniform(-bound, bound, size=(fan_out, fan_in)))
        biases.append(np.zeros(fan_out))
    return MLPParams(weights, biases)


def forward_batch(X: np.ndarray, p: MLPParams) -> tuple[np.ndarray, list[np.ndarray]]:
    """Probabilities for a (B, d) batch plus every layer's activations.

    The returned list starts with X itself and ends with the (B,) sigmoid
    output, so entry l feeds layer l.
    """
    X = np.asarray(X, dtype=float)
    if X.ndim != 2 or X.shape[1] != p.input_dim:
        raise ValueError(f"input has shape {X.shape}, expected (B, {p.input_dim})")
    activations = [X]
    a = X
    last = len(p.weights) - 1
    for i, (w, b) in enumerate(zip(p.weights, p.biases)):
        z = a @ w.T + b
        a = sigmoid(z) if i == last else np.tanh(z)
        activations.append(a)
    probs = clamp_probability(activations[-1][:, 0])
    activations[-1] = probs
    return probs, activations


def mlp_forward(x: np.ndarray, p: MLPParams) -> float:
    """Probability for a single document vector."""
    x = np.asarray(x, dtype=float)
    if x.shape != (p.input_dim,):
        raise ValueError(f"input has shape {x.shape}, expected ({p.input_dim},)")
    probs, _ = forward_batch(x[None, :], p)
    return float(probs[0])


def batch_grads(
    p: MLPParams, X: np.ndarray, y: np.ndarray
) -> tuple[float, dict[str, np.ndarray]]:
    """Mean cross-entropy over the batch and gradients for every parameter."""
    probs, acts = forward_batch(X, p)
    B = X.shape[0]
    loss = log_loss(probs, y)
    grads: dict[str, np.ndarray] = {}
    # dL/dz at the sigmoid output, already averaged over the batch
    delta = ((probs - y) / B)[:, None]
    for i in range(len(p.weights) - 1, -1, -1):
        a_in = acts[i]
        grads[f"W{i}"] = delta.T @ a_in
        grads[f"b{i}"] = delta.sum(axis=0)
        if i > 0:
            back = delta @ p.weights[i]
            hidden = acts[i]
            delta = back * (1.0 - hidden * hidden)
    return loss, grads
