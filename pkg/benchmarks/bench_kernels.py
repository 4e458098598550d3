"""Throughput comparison of the compiled and numpy kernel backends.

Runs the three hot kernels (skip-gram pair updates, recurrence forward,
recurrence backward) on identical inputs under each importable backend,
checks that their outputs agree, and prints best-of-N wall times with the
speedup of the compiled path over the fallback.

Usage: python3 benchmarks/bench_kernels.py [--repeats N] [--seed S]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from opiniq._kernels import available_backends, get_backend


def _time(fn, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        started = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - started)
    return best


def _lstm_params(rng, dim: int, hidden: int) -> dict:
    def mat(r, c):
        return rng.uniform(-0.2, 0.2, size=(r, c))

    return {
        "W_xi": mat(hidden, dim), "W_hi": mat(hidden, hidden),
        "w_ci": rng.uniform(-0.2, 0.2, size=hidden), "b_i": np.zeros(hidden),
        "W_xf": mat(hidden, dim), "W_hf": mat(hidden, hidden),
        "w_cf": rng.uniform(-0.2, 0.2, size=hidden), "b_f": np.ones(hidden),
        "W_xo": mat(hidden, dim), "W_ho": mat(hidden, hidden),
        "w_co": rng.uniform(-0.2, 0.2, size=hidden), "b_o": np.zeros(hidden),
        "W_xc": mat(hidden, dim), "W_hc": mat(hidden, hidden),
        "b_c": np.zeros(hidden),
    }


def bench_skipgram(backends, rng, repeats: int):
    vocab, dim, pairs, negs = 2000, 100, 20000, 5
    vec0 = rng.uniform(-0.5, 0.5, size=(vocab, dim))
    ctx0 = rng.uniform(-0.5, 0.5, size=(vocab, dim))
    centers = rng.integers(0, vocab, size=pairs)
    contexts = rng.integers(0, vocab, size=pairs)
    negatives = rng.integers(0, vocab, size=(pairs, negs))
    lrs = np.full(pairs, 0.025)

    results = {}
    tables = {}
    for name, mod in backends.items():
        vec, ctx = vec0.copy(), ctx0.copy()
        loss = mod.sg_update_pairs(vec, ctx, centers, contexts, negatives, lrs)
        tables[name] = (vec, ctx, loss)
        vec, ctx = vec0.copy(), ctx0.copy()
        results[name] = _time(
            lambda v=vec, c=ctx: mod.sg_update_pairs(
                v, c, centers, contexts, negatives, lrs
            ),
            repeats,
        )
    drift = _table_drift(tables)
    return f"skip-gram updates ({pairs} pairs, d={dim})", results, drift


def _table_drift(tables) -> float:
    names = list(tables)
    if len(names) < 2:
        return 0.0
    (va, ca, la), (vb, cb, lb) = tables[names[0]], tables[names[1]]
    return max(
        float(np.abs(va - vb).max()),
        float(np.abs(ca - cb).max()),
        abs(la - lb),
    )


def bench_lstm_forward(backends, rng, repeats: int):
    dim, hidden, seq = 100, 64, 80
    params = _lstm_params(rng, dim, hidden)
    X = rng.uniform(-1.0, 1.0, size=(seq, dim))

    outs = {}
    results = {}
    for name, mod in backends.items():
        outs[name] = mod.lstm_seq_forward(X, **params)
        results[name] = _time(
            lambda m=mod: m.lstm_seq_forward(X, **params), repeats
        )
    names = list(outs)
    drift = 0.0
    if len(names) > 1:
        for a, b in zip(outs[names[0]], outs[names[1]]):
            drift = max(drift, float(np.abs(np.asarray(a) - np.asarray(b)).max()))
    return f"recurrence forward (T={seq}, H={hidden}, d={dim})", results, drift


def bench_lstm_backward(backends, rng, repeats: int):
    dim, hidden, seq = 100, 64, 80
    params = _lstm_params(rng, dim, hidden)
    X = rng.uniform(-1.0, 1.0, size=(seq, dim))
    ref = get_backend("pure")
    I, F, O, G, C, Hs = ref.lstm_seq_forward(X, **params)
    dh_last = rng.uniform(-1.0, 1.0, size=hidden)
    back_args = dict(
        W_hi=params["W_hi"], W_hf=params["W_hf"],
        W_ho=params["W_ho"], W_hc=params["W_hc"],
        w_ci=params["w_ci"], w_cf=params["w_cf"], w_co=params["w_co"],
    )

    grads = {}
    results = {}
    for name, mod in backends.items():
        grads[name] = mod.lstm_seq_backward(X, I, F, O, G, C, Hs, dh_last, **back_args)
        results[name] = _time(
            lambda m=mod: m.lstm_seq_backward(X, I, F, O, G, C, Hs, dh_last, **back_args),
            repeats,
        )
    names = list(grads)
    drift = 0.0
    if len(names) > 1:
        for key in grads[names[0]]:
            delta = np.abs(
                np.asarray(grads[names[0]][key]) - np.asarray(grads[names[1]][key])
            )
            drift = max(drift, float(delta.max()))
    return f"recurrence backward (T={seq}, H={hidden}, d={dim})", results, drift


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=5, help="best-of repeat count")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args(argv)

    names = available_backends()
    backends = {name: get_backend(name) for name in names}
    print(f"backends: {', '.join(names)}")
    if "fast" not in backends:
        print("compiled backend unavailable; timing the fallback alone")

    rows = []
    for bench in (bench_skipgram, bench_lstm_forward, bench_lstm_backward):
        rng = np.random.default_rng(args.seed)
        label, results, drift = bench(backends, rng, args.repeats)
        rows.append((label, results, drift))

    width = max(len(label) for label, _, _ in rows)
    for label, results, drift in rows:
        parts = [f"{name} {secs * 1e3:9.3f} ms" for name, secs in results.items()]
        line = f"{label:<{width}}  " + "   ".join(parts)
        if "fast" in results and "pure" in results and results["fast"] > 0:
            line += f"   speedup x{results['pure'] / results['fast']:.1f}"
        line += f"   max drift {drift:.3e}"
        print(line)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
