"""Shared numeric helpers for the classifier modules."""

import math

import numpy as np

PROB_CLAMP = 1e-12


def sigmoid_scalar(z: float) -> float:
    """Overflow-safe logistic function for one value."""
    if z >= 0:
        return 1.0 / (1.0 + math.exp(-z))
    e = math.exp(z)
    return e / (1.0 + e)


def sigmoid(z: np.ndarray) -> np.ndarray:
    """Overflow-safe logistic function, elementwise."""
    out = np.empty_like(z, dtype=float)
    pos = z >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-z[pos]))
    ez = np.exp(z[~pos])
    out[~pos] = ez / (1.0 + ez)
    return out


def clamp_probability(p):
    """Pull a probability strictly inside (0, 1)."""
    return np.clip(p, PROB_CLAMP, 1.0 - PROB_CLAMP)


def log_loss(probs: np.ndarray, targets: np.ndarray) -> float:
    """Mean binary cross-entropy; probabilities are clamped before the log."""
    p = clamp_probability(np.asarray(probs, dtype=float))
    y = np.asarray(targets, dtype=float)
    return float(-(y * np.log(p) + (1.0 - y) * np.log1p(-p)).mean())
