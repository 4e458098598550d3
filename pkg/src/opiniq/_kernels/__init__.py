"""Numeric kernel backend selection.

The hot training loops (skip-gram pair updates, LSTM sequence passes) exist
twice: a Cython extension (``_fast``) built at install time and a numpy
fallback (``_pure``). The compiled backend is used when importable unless
OPINIQ_KERNELS=pure forces the fallback; OPINIQ_KERNELS=fast makes a missing
extension a hard error. Both backends implement the same contract and agree
to tight numerical tolerance; see benchmarks/bench_kernels.py for the
throughput comparison.
"""

import os

from . import _pure

_requested = os.environ.get("OPINIQ_KERNELS", "auto")
if _requested not in {"auto", "fast", "pure"}:
    raise ValueError(f"OPINIQ_KERNELS must be auto, fast, or pure, not {_requested!r}")

if _requested == "pure":
    _impl = _pure
    BACKEND = "pure"
else:
    try:
        from . import _fast as _impl  # type: ignore[attr-defined]

        BACKEND = "fast"
    except ImportError:
        if _requested == "fast":
            raise
        _impl = _pure
        BACKEND = "pure"

sg_update_pairs = _impl.sg_update_pairs
lstm_seq_forward = _impl.lstm_seq_forward
lstm_seq_backward = _impl.lstm_seq_backward


def available_backends():
    """Names of the importable kernel backends."""
    names = ["pure"]
    try:
        from . import _fast  # noqa: F401

        names.insert(0, "fast")
    except ImportError:
        pass
    return names


def get_backend(name: str):
    """Return the kernel module for an explicit backend name."""
    if name == "pure":
        return _pure
    if name == "fast":
        from . import _fast

        return _fast
    raise ValueError(f"unknown kernel backend {name!r}")
