"""Command-line interface.

Subcommands cover the full platform lifecycle: ingest documents, train
embeddings and classifiers, evaluate, classify ad hoc text, pull analytics,
reclassify after a model change, and serve the HTTP API. All output is
JSON; errors go to stderr with a nonzero exit status.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from ..classifiers import TrainConfig, predict_tokens, save_classifier
from ..classifiers import train as train_classifier_fn
from ..classifiers.io import load_classifier
from ..embeddings import EmbeddingModel, EmbedTrainConfig, train_skipgram
from ..evaluation import evaluation_report
from ..lexicon import score_sentence
from ..segment import remove_stopwords, split_sentences, tokenize
from ..store import clean_text
from .api import build_app
from .config import load_config
from .pipeline import Platform


def _print_json(payload) -> None:
    print(json.dumps(payload, indent=2, ensure_ascii=False, default=str))


def _platform(args) -> Platform:
    return Platform(load_config(args.config))


def _iter_jsonl(path):
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line:
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise ValueError(f"{path}:{lineno}: bad JSON: {exc}") from exc
            if not isinstance(obj, dict):
                raise ValueError(f"{path}:{lineno}: expected a JSON object")
            yield obj


def _object_text(obj: dict) -> str:
    parts = [str(obj.get(key, "")) for key in ("title", "text", "content")]
    return clean_text(" ".join(p for p in parts if p))


def _object_tokens(obj: dict, vocab) -> list[str]:
    if "tokens" in obj:
        return [str(t) for t in obj["tokens"]]
    return tokenize(_object_text(obj), vocab)


def _corpus_sentences(path, vocab) -> list[list[str]]:
    sentences: list[list[str]] = []
    for obj in _iter_jsonl(path):
        if "tokens" in obj:
            sentences.append([str(t) for t in obj["tokens"]])
            continue
        for sentence in split_sentences(_object_text(obj)):
            sentences.append(tokenize(sentence, vocab))
    return sentences


def _labelled_dataset(path, vocab) -> list[tuple[list[str], str]]:
    dataset = []
    for obj in _iter_jsonl(path):
        label = obj.get("label")
        if label not in ("positive", "negative"):
            raise ValueError(f"{path}: label must be positive or negative, got {label!r}")
        dataset.append((_object_tokens(obj, vocab), label))
    return dataset


def cmd_ingest(args) -> int:
    report = _platform(args).ingest_path(args.file)
    _print_json(report.to_jsonable())
    return 0


def cmd_train_embeddings(args) -> int:
    platform = _platform(args)
    sentences = _corpus_sentences(args.corpus, platform.vocab)
    cfg = EmbedTrainConfig(
        dim=args.dim,
        window=args.window,
        negatives=args.negatives,
        epochs=args.epochs,
        learning_rate=args.lr,
        min_count=args.min_count,
        seed=args.seed,
    )
    model = train_skipgram(sentences, cfg)
    model.save(args.out)
    _print_json(
        {"vocab": len(model), "dim": model.dim, "epoch_losses": model.epoch_losses}
    )
    return 0


def cmd_train_classifier(args) -> int:
    platform = _platform(args)
    dataset = _labelled_dataset(args.dataset, platform.vocab)
    embeddings = EmbeddingModel.load(args.embeddings)
    cfg = TrainConfig(
        classifier_kind=args.kind,
        epochs=args.epochs,
        learning_rate=args.lr,
        batch_size=args.batch_size,
        max_seq_len=args.max_seq_len,
        hidden_size=args.hidden,
        seed=args.seed,
        svm_regularization=args.svm_reg,
    )
    model = train_classifier_fn(dataset, embeddings, cfg)
    save_classifier(model, args.out)
    report = {
        "kind": model.kind,
        "seed": args.seed,
        "epochs": cfg.epochs,
        "epoch_losses": model.epoch_losses,
    }
    if args.report:
        Path(args.report).write_text(
            json.dumps(report, indent=2) + "\n", encoding="utf-8"
        )
    _print_json(report)
    return 0


def cmd_evaluate(args) -> int:
    platform = _platform(args)
    dataset = _labelled_dataset(args.dataset, platform.vocab)
    truth = [label for _, label in dataset]
    if args.model:
        embeddings = (
            EmbeddingModel.load(args.embeddings) if args.embeddings else platform.embeddings
        )
        if embeddings is None:
            raise ValueError("evaluate with --model needs --embeddings or a configured embedding_model")
        model = load_classifier(args.model)
        predicted = [
            predict_tokens(tokens, model, embeddings)["label"] for tokens, _ in dataset
        ]
    else:
        lex = platform.lexicons
        if lex is None:
            raise ValueError("evaluate without --model needs configured lexicons")
        predicted = []
        for tokens, _ in dataset:
            kept = remove_stopwords(tokens, lex.stopwords, lex.modifier_words)
            score = score_sentence(kept, lex)
            predicted.append("positive" if score > 0 else "negative")
    _print_json(evaluation_report(predicted, truth))
    return 0


def cmd_classify(args) -> int:
    platform = _platform(args)
    text = args.text
    path = Path(text)
    if path.exists() and path.is_file():
        text = path.read_text(encoding="utf-8")
    _print_json(platform.classify_text(text))
    return 0


def cmd_trends(args) -> int:
    points = _platform(args).trends(args.q, args.date_from, args.date_to)
    _print_json([p.to_jsonable() for p in points])
    return 0


def cmd_regions(args) -> int:
    stats = _platform(args).region_stats(args.q, args.date_from, args.date_to)
    _print_json([s.to_jsonable() for s in stats])
    return 0


def cmd_media_summary(args) -> int:
    _print_json(_platform(args).media_summary(args.q, args.date_from, args.date_to))
    return 0


def cmd_reclassify(args) -> int:
    _print_json({"reclassified": _platform(args).reclassify()})
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    config = load_config(args.config)
    if args.port is not None:
        config.port = args.port
        config.validate()
    platform = Platform(config)
    app = build_app(platform)
    uvicorn.run(app, host=config.host, port=config.port, log_level="warning")
    return 0


def _add_range_flags(sub) -> None:
    sub.add_argument("--q", default=None, help="keyword filter")
    sub.add_argument("--from", dest="date_from", default=None, help="start date")
    sub.add_argument("--to", dest="date_to", default=None, help="end date")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="opiniq", description="Public-opinion sentiment analytics platform."
    )
    parser.add_argument("--config", default=None, help="path to a key=value config file")
    commands = parser.add_subparsers(dest="command", required=True, metavar="command")

    sub = commands.add_parser("ingest", help="ingest a JSONL document file")
    sub.add_argument("file")
    sub.set_defaults(func=cmd_ingest)

    sub = commands.add_parser("train-embeddings", help="train word vectors on a corpus")
    sub.add_argument("corpus")
    sub.add_argument("--out", required=True)
    sub.add_argument("--dim", type=int, default=100)
    sub.add_argument("--window", type=int, default=5)
    sub.add_argument("--negatives", type=int, default=5)
    sub.add_argument("--epochs", type=int, default=5)
    sub.add_argument("--lr", type=float, default=0.025)
    sub.add_argument("--min-count", type=int, default=1)
    sub.add_argument("--seed", type=int, default=0)
    sub.set_defaults(func=cmd_train_embeddings)

    sub = commands.add_parser("train-classifier", help="train a sentiment classifier")
    sub.add_argument("dataset")
    sub.add_argument("--embeddings", required=True)
    sub.add_argument("--out", required=True)
    sub.add_argument("--kind", choices=("mlp", "lstm", "svm"), default="lstm")
    sub.add_argument("--epochs", type=int, default=10)
    sub.add_argument("--lr", type=float, default=0.1)
    sub.add_argument("--batch-size", type=int, default=32)
    sub.add_argument("--max-seq-len", type=int, default=200)
    sub.add_argument("--hidden", type=int, default=16)
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--svm-reg", type=float, default=1e-3)
    sub.add_argument("--report", default=None, help="also write the JSON report here")
    sub.set_defaults(func=cmd_train_classifier)

    sub = commands.add_parser("evaluate", help="score a labelled dataset")
    sub.add_argument("dataset")
    sub.add_argument("--model", default=None)
    sub.add_argument("--embeddings", default=None)
    sub.set_defaults(func=cmd_evaluate)

    sub = commands.add_parser("classify", help="classify text (or a text file)")
    sub.add_argument("text")
    sub.set_defaults(func=cmd_classify)

    sub = commands.add_parser("trends", help="daily count and positive-ratio series")
    _add_range_flags(sub)
    sub.set_defaults(func=cmd_trends)

    sub = commands.add_parser("regions", help="per-region statistics")
    _add_range_flags(sub)
    sub.set_defaults(func=cmd_regions)

    sub = commands.add_parser("media-summary", help="per-media-type statistics")
    _add_range_flags(sub)
    sub.set_defaults(func=cmd_media_summary)

    sub = commands.add_parser("reclassify", help="re-run enrichment over stored docs")
    sub.set_defaults(func=cmd_reclassify)

    sub = commands.add_parser("serve", help="run the HTTP API")
    sub.add_argument("--port", type=int, default=None)
    sub.set_defaults(func=cmd_serve)

    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    try:
        return args.func(args)
    except (ValueError, RuntimeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))
