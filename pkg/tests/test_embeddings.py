"""Skip-gram embedding training: vocabulary, determinism, similarity, file IO."""

from __future__ import annotations

import numpy as np
import pytest

from opiniq.embeddings import (
    EmbedTrainConfig,
    EmbeddingError,
    EmbeddingModel,
    TrainingDiverged,
    build_vocab,
    embed_document,
    train_skipgram,
)


def toy_corpus(n=60, seed=0):
    """Sentences where 'sun'/'warm' co-occur and 'rock' lives elsewhere."""
    rng = np.random.default_rng(seed)
    fillers = [f"w{i}" for i in range(8)]
    sentences = []
    for i in range(n):
        extra = [fillers[int(j)] for j in rng.integers(0, 8, 2)]
        if i % 2:
            sentences.append(["sun", "warm"] + extra)
        else:
            sentences.append(["rock", "cold"] + extra)
    return sentences


def small_config(**overrides):
    base = dict(dim=8, window=2, negatives=3, epochs=2, learning_rate=0.05, seed=0)
    base.update(overrides)
    return EmbedTrainConfig(**base)


class TestBuildVocab:
    def test_frequency_order_ties_lexicographic(self):
        vocab, freqs = build_vocab([["b", "a", "b", "c", "a", "b"]])
        assert vocab == {"b": 0, "a": 1, "c": 2}
        assert freqs.tolist() == [3, 2, 1]

    def test_min_count_filters(self):
        vocab, freqs = build_vocab([["a", "a", "b"]], min_count=2)
        assert vocab == {"a": 0}
        assert freqs.tolist() == [2]

    def test_empty(self):
        vocab, freqs = build_vocab([])
        assert vocab == {}
        assert freqs.size == 0


class TestConfigValidation:
    def test_rejects_bad_values(self):
        for kwargs in (
            {"dim": 1},
            {"window": 0},
            {"negatives": 0},
            {"epochs": -1},
            {"learning_rate": 0.0},
            {"learning_rate": float("nan")},
            {"min_count": 0},
        ):
            with pytest.raises(EmbeddingError):
                small_config(**kwargs).validate()


class TestTraining:
    def test_deterministic_by_seed(self):
        corpus = toy_corpus()
        a = train_skipgram(corpus, small_config(seed=3))
        b = train_skipgram(corpus, small_config(seed=3))
        assert a.vocab == b.vocab
        np.testing.assert_array_equal(a.vectors, b.vectors)
        assert a.epoch_losses == b.epoch_losses

    def test_seed_changes_vectors(self):
        corpus = toy_corpus()
        a = train_skipgram(corpus, small_config(seed=0))
        b = train_skipgram(corpus, small_config(seed=1))
        assert np.max(np.abs(a.vectors - b.vectors)) > 0

    def test_zero_epochs_returns_seeded_init(self):
        corpus = toy_corpus()
        model = train_skipgram(corpus, small_config(epochs=0))
        vocab, _ = build_vocab(corpus)
        rng = np.random.default_rng(0)
        expected = (rng.random((len(vocab), 8)) - 0.5) / 8
        np.testing.assert_array_equal(model.vectors, expected)
        assert model.epoch_losses == []

    def test_loss_recorded_per_epoch(self):
        model = train_skipgram(toy_corpus(), small_config(epochs=4))
        assert len(model.epoch_losses) == 4
        assert all(l > 0 for l in model.epoch_losses)

    def test_training_reduces_loss(self):
        model = train_skipgram(toy_corpus(n=120), small_config(epochs=6))
        assert model.epoch_losses[-1] < model.epoch_losses[0]

    def test_vectors_finite(self):
        model = train_skipgram(toy_corpus(), small_config())
        assert np.isfinite(model.vectors).all()

    def test_divergence_raises(self):
        with pytest.raises(TrainingDiverged):
            train_skipgram(toy_corpus(), small_config(learning_rate=1e12, epochs=3))

    def test_empty_vocab_rejected(self):
        with pytest.raises(EmbeddingError):
            train_skipgram([["rare"]], small_config(min_count=5))

    def test_no_pairs_short_sentences(self):
        # one-word sentences produce no context pairs; init comes back unchanged
        model = train_skipgram([["a"], ["b"]], small_config(epochs=2))
        assert model.epoch_losses == [0.0, 0.0]

    def test_co_occurring_words_grow_similar(self):
        corpus = toy_corpus(n=200)
        model = train_skipgram(corpus, small_config(epochs=5))
        assert model.cosine("sun", "warm") > model.cosine("sun", "rock")


class TestEmbeddingModel:
    def test_oov_vector_is_zero(self):
        model = EmbeddingModel({"a": 0}, np.ones((1, 4)))
        assert np.array_equal(model.vector("missing"), np.zeros(4))
        assert "missing" not in model
        assert len(model) == 1

    def test_vector_returns_copy(self):
        model = EmbeddingModel({"a": 0}, np.ones((1, 4)))
        v = model.vector("a")
        v[0] = 99.0
        assert model.vectors[0, 0] == 1.0

    def test_cosine_identities(self):
        vecs = np.array([[1.0, 0.0], [2.0, 0.0], [0.0, 3.0], [-1.0, 0.0]])
        model = EmbeddingModel({"a": 0, "b": 1, "c": 2, "d": 3}, vecs)
        assert model.cosine("a", "b") == pytest.approx(1.0)
        assert model.cosine("a", "c") == pytest.approx(0.0)
        assert model.cosine("a", "d") == pytest.approx(-1.0)

    def test_cosine_oov_raises(self):
        model = EmbeddingModel({"a": 0}, np.ones((1, 2)))
        with pytest.raises(EmbeddingError):
            model.cosine("a", "nope")

    def test_cosine_zero_vector_raises(self):
        model = EmbeddingModel({"a": 0, "b": 1}, np.array([[1.0, 0.0], [0.0, 0.0]]))
        with pytest.raises(EmbeddingError):
            model.cosine("a", "b")

    def test_validation(self):
        with pytest.raises(EmbeddingError):
            EmbeddingModel({"a": 0, "b": 2}, np.ones((2, 3)))  # indices not 0..V-1
        with pytest.raises(EmbeddingError):
            EmbeddingModel({"a": 0}, np.ones((2, 3)))  # row count mismatch
        with pytest.raises(EmbeddingError):
            EmbeddingModel({"a": 0}, np.array([[np.nan, 1.0]]))

    def test_save_load_round_trip(self, tmp_path):
        model = train_skipgram(toy_corpus(), small_config())
        path = tmp_path / "vectors.txt"
        model.save(path)
        again = EmbeddingModel.load(path)
        assert again.vocab == model.vocab
        np.testing.assert_array_equal(again.vectors, model.vectors)

    def test_load_rejects_bad_header(self, tmp_path):
        path = tmp_path / "vectors.txt"
        path.write_text("not a header\n", encoding="utf-8")
        with pytest.raises(EmbeddingError):
            EmbeddingModel.load(path)

    def test_load_rejects_short_row(self, tmp_path):
        path = tmp_path / "vectors.txt"
        path.write_text("1 3\nword 0.5 0.5\n", encoding="utf-8")
        with pytest.raises(EmbeddingError):
            EmbeddingModel.load(path)


class TestEmbedDocument:
    def test_mean_of_known_tokens(self):
        vecs = np.array([[1.0, 0.0], [0.0, 1.0]])
        model = EmbeddingModel({"a": 0, "b": 1}, vecs)
        np.testing.assert_allclose(embed_document(["a", "b", "zz"], model), [0.5, 0.5])

    def test_all_unknown_is_zero(self):
        model = EmbeddingModel({"a": 0}, np.ones((1, 3)))
        assert np.array_equal(embed_document(["x", "y"], model), np.zeros(3))

    def test_empty_tokens(self):
        model = EmbeddingModel({"a": 0}, np.ones((1, 3)))
        assert np.array_equal(embed_document([], model), np.zeros(3))
