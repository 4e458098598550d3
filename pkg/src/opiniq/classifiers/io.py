"""Text serialization for trained classifiers.

Layout: an optional leading `# format 1` comment, a `kind H d` header, a
`max_seq_len N` line, a `sizes ...` line for the feed-forward kind, then
named parameter blocks (`block NAME ROWS COLS` followed by that many rows
of decimal floats) and a closing `end` line. Floats are written with repr
so values round-trip exactly.
"""

from __future__ import annotations

import numpy as np

from .lstm import PARAM_NAMES, LSTMParams
from .mlp import MLPParams
from .svm import SVMParams
from .train import CLASSIFIER_KINDS, ClassifierModel

FORMAT_VERSION = 1


class ModelFileError(ValueError):
    """Unreadable or inconsistent classifier file."""


def _write_block(fh, name: str, arr: np.ndarray) -> None:
    mat = np.atleast_2d(np.asarray(arr, dtype=float))
    fh.write(f"block {name} {mat.shape[0]} {mat.shape[1]}\n")
    for row in mat:
        fh.write(" ".join(repr(float(v)) for v in row) + "\n")


def save_classifier(model: ClassifierModel, path) -> None:
    """Write the model's parameters to a versioned text file."""
    params = model.params
    if model.kind == "mlp":
        header_h = params.sizes[1] if len(params.sizes) > 2 else 0
    elif model.kind == "lstm":
        header_h = params.hidden_size
    else:
        header_h = 0
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"# format {FORMAT_VERSION}\n")
        fh.write(f"{model.kind} {header_h} {model.input_dim}\n")
        fh.write(f"max_seq_len {model.max_seq_len}\n")
        if model.kind == "mlp":
            fh.write("sizes " + " ".join(str(s) for s in params.sizes) + "\n")
        for name, arr in params.items():
            _write_block(fh, name, arr)
        fh.write("end\n")


def _read_lines(path) -> list[str]:
    with open(path, "r", encoding="utf-8") as fh:
        return [
            line.rstrip("\n")
            for line in fh
            if line.strip() and not line.startswith("#")
        ]


def _parse_blocks(lines: list[str], start: int) -> dict[str, np.ndarray]:
    blocks: dict[str, np.ndarray] = {}
    pos = start
    while pos < len(lines):
        line = lines[pos]
        if line == "end":
            return blocks
        parts = line.split()
        if len(parts) != 4 or parts[0] != "block":
            raise ModelFileError(f"expected a block header, got {line!r}")
        name, rows, cols = parts[1], int(parts[2]), int(parts[3])
        if name in blocks:
            raise ModelFileError(f"duplicate block {name!r}")
        mat = np.empty((rows, cols))
        for r in range(rows):
            pos += 1
            if pos >= len(lines):
                raise ModelFileError(f"block {name!r} is truncated")
            values = lines[pos].split()
            if len(values) != cols:
                raise ModelFileError(f"block {name!r} row {r} has wrong width")
            mat[r] = [float(v) for v in values]
        blocks[name] = mat
        pos += 1
    raise ModelFileError("missing end line")


def load_classifier(path) -> ClassifierModel:
    """Read a model file written by save_classifier."""
    lines = _read_lines(path)
    if len(lines) < 3:
        raise ModelFileError(f"{path} is not a classifier file")
    header = lines[0].split()
    if len(header) != 3 or header[0] not in CLASSIFIER_KINDS:
        raise ModelFileError(f"bad header {lines[0]!r}")
    kind = header[0]
    try:
        hidden, dim = int(header[1]), int(header[2])
    except ValueError as exc:
        raise ModelFileError(f"bad header {lines[0]!r}") from exc
    msl_parts = lines[1].split()
    if len(msl_parts) != 2 or msl_parts[0] != "max_seq_len":
        raise ModelFileError("missing max_seq_len line")
    max_seq_len = int(msl_parts[1])

    block_start = 2
    sizes: list[int] = []
    if kind == "mlp":
        size_parts = lines[2].split()
        if size_parts[0] != "sizes":
            raise ModelFileError("missing sizes line for the feed-forward kind")
        sizes = [int(s) for s in size_parts[1:]]
        block_start = 3
    blocks = _parse_blocks(lines, block_start)

    if kind == "lstm":
        missing = [n for n in PARAM_NAMES if n not in blocks]
        if missing:
            raise ModelFileError(f"missing blocks: {missing}")
        values = {}
        for name in PARAM_NAMES:
            mat = blocks[name]
            values[name] = mat if name.startswith("W_") else mat.reshape(-1)
        params: object = LSTMParams(**values)
        params.validate()
        if params.hidden_size != hidden or params.input_dim != dim:
            raise ModelFileError("header dimensions do not match the blocks")
    elif kind == "mlp":
        weights = []
        biases = []
        for i in range(len(sizes) - 1):
            try:
                weights.append(blocks[f"W{i}"])
                biases.append(blocks[f"b{i}"].reshape(-1))
            except KeyError as exc:
                raise ModelFileError(f"missing layer {i} blocks") from exc
        params = MLPParams(weights, biases)
        params.validate()
        if params.sizes != sizes or params.input_dim != dim:
            raise ModelFileError("header dimensions do not match the blocks")
    else:
        if "w" not in blocks or "b" not in blocks:
            raise ModelFileError("missing w or b block")
        params = SVMParams(blocks["w"].reshape(-1), float(blocks["b"][0, 0]))
        params.validate()
        if params.input_dim != dim:
            raise ModelFileError("header dimensions do not match the blocks")
    return ClassifierModel(
        kind=kind, params=params, input_dim=dim, max_seq_len=max_seq_len
    )
