# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled training kernels.

Mirrors _pure.py operation for operation: per-pair two-phase skip-gram
updates and the peephole recurrence passes. Input projections and the final
weight-gradient contractions go through numpy matmuls; the sequential inner
loops are typed C loops.
"""

from libc.math cimport exp, log, log1p, tanh
from libc.stdint cimport int64_t

import numpy as np

cdef double CLAMP = 1e-12


cdef inline double _sigmoid(double x) noexcept nogil:
    return 1.0 / (1.0 + exp(-x))


def sg_update_pairs(
    double[:, ::1] vec,
    double[:, ::1] ctx,
    int64_t[::1] centers,
    int64_t[::1] contexts,
    int64_t[:, ::1] negatives,
    double[::1] lrs,
):
    """Apply one SGD step per (center, context) pair, in order, in place.

    Same contract as the numpy backend: sigmoids for a pair are computed
    from pre-update table values, negatives equal to the true context are
    skipped, and the summed log loss is returned.
    """
    cdef Py_ssize_t n = centers.shape[0]
    cdef Py_ssize_t k = negatives.shape[1]
    cdef Py_ssize_t d = vec.shape[1]
    cdef Py_ssize_t p, j, m, t
    cdef int64_t center, context, cand
    cdef double lr, s, f, total = 0.0
    fbuf_arr = np.empty(k + 1)
    gbuf_arr = np.empty(k + 1)
    rows_arr = np.empty(k + 1, dtype=np.int64)
    dv_arr = np.empty(d)
    cdef double[::1] fbuf = fbuf_arr
    cdef double[::1] gbuf = gbuf_arr
    cdef int64_t[::1] rows = rows_arr
    cdef double[::1] dv = dv_arr
    with nogil:
        for p in range(n):
            center = centers[p]
            context = contexts[p]
            lr = lrs[p]
            rows[0] = context
            m = 1
            for j in range(k):
                cand = negatives[p, j]
                if cand != context:
                    rows[m] = cand
                    m += 1
            for j in range(m):
                s = 0.0
                for t in range(d):
                    s += ctx[rows[j], t] * vec[center, t]
                f = _sigmoid(s)
                fbuf[j] = f
                if j == 0:
                    gbuf[j] = (f - 1.0) * lr
                else:
                    gbuf[j] = f * lr
            for t in range(d):
                dv[t] = 0.0
            for j in range(m):
                for t in range(d):
                    dv[t] += gbuf[j] * ctx[rows[j], t]
            for j in range(m):
                for t in range(d):
                    ctx[rows[j], t] -= gbuf[j] * vec[center, t]
            for t in range(d):
                vec[center, t] -= dv[t]
            f = fbuf[0]
            if f < CLAMP:
                f = CLAMP
            elif f > 1.0 - CLAMP:
                f = 1.0 - CLAMP
            total -= log(f)
            for j in range(1, m):
                f = fbuf[j]
                if f < CLAMP:
                    f = CLAMP
                elif f > 1.0 - CLAMP:
                    f = 1.0 - CLAMP
                total -= log1p(-f)
    return total


def lstm_seq_forward(
    double[:, ::1] X,
    double[:, ::1] W_xi, double[:, ::1] W_hi, double[::1] w_ci, double[::1] b_i,
    double[:, ::1] W_xf, double[:, ::1] W_hf, double[::1] w_cf, double[::1] b_f,
    double[:, ::1] W_xo, double[:, ::1] W_ho, double[::1] w_co, double[::1] b_o,
    double[:, ::1] W_xc, double[:, ::1] W_hc, double[::1] b_c,
):
    """Run one (T, d) sequence; return the (I, F, O, G, C, H) gate traces."""
    cdef Py_ssize_t T = X.shape[0]
    cdef Py_ssize_t H = W_xi.shape[0]
    I_arr = np.empty((T, H))
    F_arr = np.empty((T, H))
    O_arr = np.empty((T, H))
    G_arr = np.empty((T, H))
    C_arr = np.empty((T, H))
    H_arr = np.empty((T, H))
    if T == 0:
        return I_arr, F_arr, O_arr, G_arr, C_arr, H_arr
    X_np = np.asarray(X)
    xi_arr = X_np @ np.asarray(W_xi).T
    xf_arr = X_np @ np.asarray(W_xf).T
    xo_arr = X_np @ np.asarray(W_xo).T
    xg_arr = X_np @ np.asarray(W_xc).T
    h_arr = np.zeros(H)
    c_arr = np.zeros(H)
    cdef double[:, ::1] I = I_arr, F = F_arr, O = O_arr
    cdef double[:, ::1] G = G_arr, C = C_arr, Hs = H_arr
    cdef double[:, ::1] xi = xi_arr, xf = xf_arr, xo = xo_arr, xg = xg_arr
    cdef double[::1] h = h_arr, c = c_arr
    cdef Py_ssize_t t, row, col
    cdef double s_i, s_f, s_o, s_g, c_new
    with nogil:
        for t in range(T):
            for row in range(H):
                s_i = xi[t, row] + w_ci[row] * c[row] + b_i[row]
                s_f = xf[t, row] + w_cf[row] * c[row] + b_f[row]
                s_o = xo[t, row] + w_co[row] * c[row] + b_o[row]
                s_g = xg[t, row] + b_c[row]
                for col in range(H):
                    s_i += W_hi[row, col] * h[col]
                    s_f += W_hf[row, col] * h[col]
                    s_o += W_ho[row, col] * h[col]
                    s_g += W_hc[row, col] * h[col]
                I[t, row] = _sigmoid(s_i)
                F[t, row] = _sigmoid(s_f)
                O[t, row] = _sigmoid(s_o)
                G[t, row] = tanh(s_g)
            for row in range(H):
                c_new = F[t, row] * c[row] + I[t, row] * G[t, row]
                C[t, row] = c_new
                Hs[t, row] = O[t, row] * tanh(c_new)
            for row in range(H):
                c[row] = C[t, row]
                h[row] = Hs[t, row]
    return I_arr, F_arr, O_arr, G_arr, C_arr, H_arr


def lstm_seq_backward(
    double[:, ::1] X,
    double[:, ::1] I, double[:, ::1] F, double[:, ::1] O,
    double[:, ::1] G, double[:, ::1] C, double[:, ::1] Hs,
    double[::1] dh_last,
    double[:, ::1] W_hi, double[:, ::1] W_hf, double[:, ::1] W_ho, double[:, ::1] W_hc,
    double[::1] w_ci, double[::1] w_cf, double[::1] w_co,
):
    """Backpropagate dh_last through the stored trace; return the grad dict."""
    cdef Py_ssize_t T = I.shape[0]
    cdef Py_ssize_t H = I.shape[1]
    DA_i_arr = np.zeros((T, H))
    DA_f_arr = np.zeros((T, H))
    DA_o_arr = np.zeros((T, H))
    DA_g_arr = np.zeros((T, H))
    dh_arr = np.array(dh_last, dtype=float)
    dc_arr = np.zeros(H)
    dh_next_arr = np.zeros(H)
    cdef double[:, ::1] DA_i = DA_i_arr, DA_f = DA_f_arr
    cdef double[:, ::1] DA_o = DA_o_arr, DA_g = DA_g_arr
    cdef double[::1] dh = dh_arr, dc = dc_arr, dh_next = dh_next_arr
    cdef Py_ssize_t t, row, col
    cdef double tc, c_prev, da_i, da_f, da_o, da_g, dc_row, s
    with nogil:
        for t in range(T - 1, -1, -1):
            for row in range(H):
                c_prev = C[t - 1, row] if t > 0 else 0.0
                tc = tanh(C[t, row])
                da_o = dh[row] * tc * O[t, row] * (1.0 - O[t, row])
                dc_row = dc[row] + dh[row] * O[t, row] * (1.0 - tc * tc)
                da_f = dc_row * c_prev * F[t, row] * (1.0 - F[t, row])
                da_i = dc_row * G[t, row] * I[t, row] * (1.0 - I[t, row])
                da_g = dc_row * I[t, row] * (1.0 - G[t, row] * G[t, row])
                DA_i[t, row] = da_i
                DA_f[t, row] = da_f
                DA_o[t, row] = da_o
                DA_g[t, row] = da_g
                dc[row] = dc_row * F[t, row] + da_i * w_ci[row] + da_f * w_cf[row] + da_o * w_co[row]
            for col in range(H):
                s = 0.0
                for row in range(H):
                    s += W_hi[row, col] * DA_i[t, row]
                    s += W_hf[row, col] * DA_f[t, row]
                    s += W_ho[row, col] * DA_o[t, row]
                    s += W_hc[row, col] * DA_g[t, row]
                dh_next[col] = s
            for col in range(H):
                dh[col] = dh_next[col]
    X_np = np.asarray(X)
    h_prev = np.asarray(Hs)[:-1]
    c_prev_all = np.asarray(C)[:-1]
    return {
        "W_xi": DA_i_arr.T @ X_np,
        "W_hi": DA_i_arr[1:].T @ h_prev,
        "w_ci": (DA_i_arr[1:] * c_prev_all).sum(axis=0),
        "b_i": DA_i_arr.sum(axis=0),
        "W_xf": DA_f_arr.T @ X_np,
        "W_hf": DA_f_arr[1:].T @ h_prev,
        "w_cf": (DA_f_arr[1:] * c_prev_all).sum(axis=0),
        "b_f": DA_f_arr.sum(axis=0),
        "W_xo": DA_o_arr.T @ X_np,
        "W_ho": DA_o_arr[1:].T @ h_prev,
        "w_co": (DA_o_arr[1:] * c_prev_all).sum(axis=0),
        "b_o": DA_o_arr.sum(axis=0),
        "W_xc": DA_g_arr.T @ X_np,
        "W_hc": DA_g_arr[1:].T @ h_prev,
        "b_c": DA_g_arr.sum(axis=0),
    }
