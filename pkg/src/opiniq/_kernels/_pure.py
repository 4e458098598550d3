"""Numpy implementations of the training kernels.

These are the reference semantics; the compiled backend in ``_fast.pyx``
mirrors them operation for operation. Both backends are deterministic given
their inputs: every random quantity (shuffles, negative samples, learning
rate schedules) is drawn by the caller and passed in as plain arrays.
"""

import numpy as np

_CLAMP = 1e-12


def sg_update_pairs(vec, ctx, centers, contexts, negatives, lrs):
    """Apply one SGD step per (center, context) pair, in order, in place.

    vec and ctx are the (V, d) input and output embedding tables. For pair p
    the targets are the true context plus the rows of negatives[p], except
    that a negative equal to the true context is skipped. All sigmoids for a
    pair are computed from the tables as they stood before the pair's
    updates, then the updates are applied. Returns the summed log loss.
    """
    total = 0.0
    n = centers.shape[0]
    for p in range(n):
        center = int(centers[p])
        context = int(contexts[p])
        lr = float(lrs[p])
        negs = negatives[p]
        rows = np.concatenate(([context], negs[negs != context]))
        old_ctx = ctx[rows].copy()
        v = vec[center].copy()
        f = 1.0 / (1.0 + np.exp(-(old_ctx @ v)))
        g = f.copy()
        g[0] -= 1.0
        g *= lr
        np.subtract.at(ctx, rows, np.outer(g, v))
        vec[center] -= g @ old_ctx
        clamped = np.clip(f, _CLAMP, 1.0 - _CLAMP)
        total += -np.log(clamped[0]) - np.log1p(-clamped[1:]).sum()
    return float(total)


def _sigmoid(x):
    return 1.0 / (1.0 + np.exp(-x))


def lstm_seq_forward(
    X,
    W_xi, W_hi, w_ci, b_i,
    W_xf, W_hf, w_cf, b_f,
    W_xo, W_ho, w_co, b_o,
    W_xc, W_hc, b_c,
):
    """Run one sequence through the recurrence, returning all gate traces.

    X is (T, d). Returns (I, F, O, G, C, H), each (T, H), where G is the
    candidate tanh activation and C, H are the cell and hidden states. The
    input, forget, and output gates read the previous cell state through
    elementwise peephole vectors; state starts at zero.
    """
    T = X.shape[0]
    H = W_xi.shape[0]
    I = np.empty((T, H))
    F = np.empty((T, H))
    O = np.empty((T, H))
    G = np.empty((T, H))
    C = np.empty((T, H))
    Hs = np.empty((T, H))
    if T == 0:
        return I, F, O, G, C, Hs
    xi = X @ W_xi.T
    xf = X @ W_xf.T
    xo = X @ W_xo.T
    xg = X @ W_xc.T
    h = np.zeros(H)
    c = np.zeros(H)
    for t in range(T):
        i_t = _sigmoid(xi[t] + W_hi @ h + w_ci * c + b_i)
        f_t = _sigmoid(xf[t] + W_hf @ h + w_cf * c + b_f)
        o_t = _sigmoid(xo[t] + W_ho @ h + w_co * c + b_o)
        g_t = np.tanh(xg[t] + W_hc @ h + b_c)
        c = f_t * c + i_t * g_t
        h = o_t * np.tanh(c)
        I[t] = i_t
        F[t] = f_t
        O[t] = o_t
        G[t] = g_t
        C[t] = c
        Hs[t] = h
    return I, F, O, G, C, Hs


def lstm_seq_backward(
    X, I, F, O, G, C, Hs, dh_last,
    W_hi, W_hf, W_ho, W_hc, w_ci, w_cf, w_co,
):
    """Backpropagate dh_last (gradient at the final hidden state) through time.

    Arguments mirror the forward trace. Returns a dict of gradients for all
    fifteen recurrence parameters, keyed by the forward argument names.
    """
    T, Hdim = I.shape
    DA_i = np.zeros((T, Hdim))
    DA_f = np.zeros((T, Hdim))
    DA_o = np.zeros((T, Hdim))
    DA_g = np.zeros((T, Hdim))
    dh = np.asarray(dh_last, dtype=float).copy()
    dc = np.zeros(Hdim)
    for t in range(T - 1, -1, -1):
        c_prev = C[t - 1] if t > 0 else np.zeros(Hdim)
        tc = np.tanh(C[t])
        da_o = dh * tc * O[t] * (1.0 - O[t])
        dc = dc + dh * O[t] * (1.0 - tc * tc)
        da_f = dc * c_prev * F[t] * (1.0 - F[t])
        da_i = dc * G[t] * I[t] * (1.0 - I[t])
        da_g = dc * I[t] * (1.0 - G[t] * G[t])
        DA_i[t] = da_i
        DA_f[t] = da_f
        DA_o[t] = da_o
        DA_g[t] = da_g
        dh = W_hi.T @ da_i + W_hf.T @ da_f + W_ho.T @ da_o + W_hc.T @ da_g
        dc = dc * F[t] + da_i * w_ci + da_f * w_cf + da_o * w_co
    h_prev = Hs[:-1]
    c_prev_all = C[:-1]
    return {
        "W_xi": DA_i.T @ X,
        "W_hi": DA_i[1:].T @ h_prev,
        "w_ci": (DA_i[1:] * c_prev_all).sum(axis=0),
        "b_i": DA_i.sum(axis=0),
        "W_xf": DA_f.T @ X,
        "W_hf": DA_f[1:].T @ h_prev,
        "w_cf": (DA_f[1:] * c_prev_all).sum(axis=0),
        "b_f": DA_f.sum(axis=0),
        "W_xo": DA_o.T @ X,
        "W_ho": DA_o[1:].T @ h_prev,
        "w_co": (DA_o[1:] * c_prev_all).sum(axis=0),
        "b_o": DA_o.sum(axis=0),
        "W_xc": DA_g.T @ X,
        "W_hc": DA_g[1:].T @ h_prev,
        "b_c": DA_g.sum(axis=0),
    }
