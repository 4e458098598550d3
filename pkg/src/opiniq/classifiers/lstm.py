"""Peephole LSTM binary classifier.

One recurrent layer scans the embedded token sequence from zero initial
state; the input, forget, and output gates each peek at the previous cell
state through a diagonal (elementwise) peephole vector, and the candidate
has its own parameters. A logistic readout of the final hidden state gives
the positive-class probability; an empty sequence therefore scores
sigmoid(b_out).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .. import _kernels
from ._common import clamp_probability, sigmoid, sigmoid_scalar

PARAM_NAMES = (
    "W_xi", "W_hi", "w_ci", "b_i",
    "W_xf", "W_hf", "w_cf", "b_f",
    "W_xo", "W_ho", "w_co", "b_o",
    "W_xc", "W_hc", "b_c",
    "w_out", "b_out",
)


@dataclass
class LSTMParams:
    """All recurrence and readout parameters.

    Matrix shapes: W_x* is (H, d), W_h* is (H, H); peepholes w_c* and biases
    are length-H vectors; w_out is length H and b_out is a length-1 vector.
    """

    W_xi: np.ndarray
    W_hi: np.ndarray
    w_ci: np.ndarray
    b_i: np.ndarray
    W_xf: np.ndarray
    W_hf: np.ndarray
    w_cf: np.ndarray
    b_f: np.ndarray
    W_xo: np.ndarray
    W_ho: np.ndarray
    w_co: np.ndarray
    b_o: np.ndarray
    W_xc: np.ndarray
    W_hc: np.ndarray
    b_c: np.ndarray
    w_out: np.ndarray
    b_out: np.ndarray

    @property
    def hidden_size(self) -> int:
        return int(self.W_xi.shape[0])

    @property
    def input_dim(self) -> int:
        return int(self.W_xi.shape[1])

    def items(self):
        """(name, array) pairs in the canonical parameter order."""
        return [(name, getattr(self, name)) for name in PARAM_NAMES]

    def validate(self) -> None:
        H, d = self.W_xi.shape
        expect = {
            "W_xi": (H, d), "W_xf": (H, d), "W_xo": (H, d), "W_xc": (H, d),
            "W_hi": (H, H), "W_hf": (H, H), "W_ho": (H, H), "W_hc": (H, H),
            "w_ci": (H,), "w_cf": (H,), "w_co": (H,),
            "b_i": (H,), "b_f": (H,), "b_o": (H,), "b_c": (H,),
            "w_out": (H,), "b_out": (1,),
        }
        for name, arr in self.items():
            if arr.shape != expect[name]:
                raise ValueError(
                    f"{name} has shape {arr.shape}, expected {expect[name]}"
                )
            if not np.isfinite(arr).all():
                raise ValueError(f"{name} contains non-finite values")

    def copy(self) -> "LSTMParams":
        return LSTMParams(**{name: arr.copy() for name, arr in self.items()})

    def recurrence_args(self) -> tuple:
        """Arguments for the sequence kernels, in kernel order."""
        return (
            self.W_xi, self.W_hi, self.w_ci, self.b_i,
            self.W_xf, self.W_hf, self.w_cf, self.b_f,
            self.W_xo, self.W_ho, self.w_co, self.b_o,
            self.W_xc, self.W_hc, self.b_c,
        )


def init_lstm(input_dim: int, hidden_size: int, rng: np.random.Generator) -> LSTMParams:
    """Fan-in-scaled uniform initialization; forget bias starts at 1.0.

    Draws happen in PARAM_NAMES order so the result is fully determined by
    the generator state.
    """
    if input_dim < 1 or hidden_size < 1:
        raise ValueError("input_dim and hidden_size must be positive")
    H, d = hidden_size, input_dim

    def uniform(shape, fan_in):
        bound = 1.0 / np.sqrt(fan_in)
        return rng.uniform(-bound, bound, size=shape)

    values = {}
    for name in PARAM_NAMES:
        if name.startswith("W_x"):
            values[name] = uniform((H, d), d)
        elif name.startswith("W_h"):
            values[name] = uniform((H, H), H)
        elif name.startswith("w_c"):
            values[name] = uniform((H,), H)
        elif name == "w_out":
            values[name] = uniform((H,), H)
        elif name == "b_f":
            values[name] = np.ones(H)
        elif name == "b_out":
            values[name] = np.zeros(1)
        else:
            values[name] = np.zeros(H)
    return LSTMParams(**values)


def lstm_cell(
    x: np.ndarray, h_prev: np.ndarray, c_prev: np.ndarray, p: LSTMParams
) -> tuple[np.ndarray, np.ndarray]:
    """One recurrence step; returns (h_t, c_t).

    All three gates read c_prev through their peephole vectors; the
    candidate tanh(W_xc x + W_hc h_prev + b_c) has no peephole.
    """
    x = np.asarray(x, dtype=float)
    h_prev = np.asarray(h_prev, dtype=float)
    c_prev = np.asarray(c_prev, dtype=float)
    H, d = p.W_xi.shape
    if x.shape != (d,):
        raise ValueError(f"x has shape {x.shape}, expected ({d},)")
    if h_prev.shape != (H,) or c_prev.shape != (H,):
        raise ValueError(f"state vectors must have shape ({H},)")
    i_t = sigmoid(p.W_xi @ x + p.W_hi @ h_prev + p.w_ci * c_prev + p.b_i)
    f_t = sigmoid(p.W_xf @ x + p.W_hf @ h_prev + p.w_cf * c_prev + p.b_f)
    g_t = np.tanh(p.W_xc @ x + p.W_hc @ h_prev + p.b_c)
    c_t = f_t * c_prev + i_t * g_t
    o_t = sigmoid(p.W_xo @ x + p.W_ho @ h_prev + p.w_co * c_prev + p.b_o)
    h_t = o_t * np.tanh(c_t)
    return h_t, c_t


def sequence_trace(X: np.ndarray, p: LSTMParams):
    """Kernel forward pass over a (T, d) matrix; returns the gate traces."""
    X = np.ascontiguousarray(X, dtype=float)
    return _kernels.lstm_seq_forward(X, *p.recurrence_args())


def lstm_probability(X: np.ndarray, p: LSTMParams) -> float:
    """Positive-class probability for an embedded (T, d) sequence."""
    X = np.ascontiguousarray(X, dtype=float)
    if X.shape[0] == 0:
        h_last = np.zeros(p.hidden_size)
    else:
        traces = sequence_trace(X, p)
        h_last = traces[5][-1]
    z = float(p.w_out @ h_last + p.b_out[0])
    return float(clamp_probability(sigmoid_scalar(z)))


def lstm_forward(tokens, embeddings, p: LSTMParams, max_seq_len: int = 200) -> float:
    """Probability for a token sequence; tokens embed via the model table.

    Out-of-vocabulary tokens contribute zero vectors as timesteps; the
    sequence is truncated to max_seq_len before the scan.
    """
    rows = [embeddings.vector(t) for t in tokens[:max_seq_len]]
    X = np.array(rows, dtype=float).reshape(len(rows), embeddings.dim)
    return lstm_probability(X, p)
