"""Configuration loading, the platform pipeline, and the CLI."""

from __future__ import annotations

import json

import pytest
from conftest import FIXTURES, doc_line, fixture_config, write_config_file

from opiniq.service import AppConfig, ConfigError, Platform, load_config
from opiniq.service.cli import run


class TestLoadConfig:
    def test_defaults_without_file(self):
        cfg = load_config(env={})
        assert cfg.data_dir == "data"
        assert cfg.port == 8080
        assert cfg.page_size == 20
        assert cfg.sentiment_lexicon is None

    def test_reads_key_value_file(self, tmp_path):
        path = write_config_file(tmp_path)
        cfg = load_config(path, env={})
        assert cfg.data_dir == str(tmp_path / "data")
        assert cfg.sentiment_lexicon == str(FIXTURES / "sentiment.tsv")

    def test_comments_and_blanks_ignored(self, tmp_path):
        path = tmp_path / "app.conf"
        path.write_text("# a comment\n\nport = 9001\n", encoding="utf-8")
        assert load_config(path, env={}).port == 9001

    def test_unknown_key_rejected(self, tmp_path):
        path = tmp_path / "app.conf"
        path.write_text("shard_count = 4\n", encoding="utf-8")
        with pytest.raises(ConfigError):
            load_config(path, env={})

    def test_missing_equals_rejected(self, tmp_path):
        path = tmp_path / "app.conf"
        path.write_text("port 9001\n", encoding="utf-8")
        with pytest.raises(ConfigError):
            load_config(path, env={})

    def test_env_overrides_file(self, tmp_path):
        path = tmp_path / "app.conf"
        path.write_text("port = 9001\n", encoding="utf-8")
        cfg = load_config(path, env={"port": "9002"})
        assert cfg.port == 9002

    def test_bad_int_rejected(self):
        with pytest.raises(ConfigError):
            load_config(env={"page_size": "many"})

    def test_empty_value_means_unset(self, tmp_path):
        path = tmp_path / "app.conf"
        path.write_text("gazetteer =\n", encoding="utf-8")
        assert load_config(path, env={}).gazetteer is None

    def test_empty_data_dir_rejected(self):
        with pytest.raises(ConfigError):
            load_config(env={"data_dir": ""})

    def test_missing_config_file_rejected(self, tmp_path):
        with pytest.raises(ConfigError):
            load_config(tmp_path / "nope.conf", env={})

    def test_missing_path_value_rejected(self, tmp_path):
        with pytest.raises(ConfigError):
            fixture_config(tmp_path, gazetteer=str(tmp_path / "missing.csv"))

    def test_partial_lexicon_set_rejected(self, tmp_path):
        with pytest.raises(ConfigError):
            fixture_config(tmp_path, degree_lexicon=None)

    def test_port_bounds(self):
        with pytest.raises(ConfigError):
            load_config(env={"port": "0"})
        with pytest.raises(ConfigError):
            load_config(env={"port": "70000"})

    def test_page_size_bound(self):
        with pytest.raises(ConfigError):
            load_config(env={"page_size": "0"})

    def test_store_path(self):
        cfg = AppConfig(data_dir="/tmp/x")
        assert str(cfg.store_path) == "/tmp/x/documents.jsonl"


class TestIngest:
    def test_happy_path_counts(self, platform):
        report = platform.ingest_records([doc_line(0), doc_line(1)])
        assert report.read == 2
        assert report.stored == 2
        assert report.rejected == 0
        assert report.duplicates == 0

    def test_malformed_lines_counted(self, platform):
        report = platform.ingest_records(["{broken", '["list"]', doc_line(0)])
        assert report.read == 3
        assert report.stored == 1
        assert report.reasons == {"malformed_line": 2}

    def test_blank_lines_skipped(self, platform):
        report = platform.ingest_records(["", "   ", doc_line(0)])
        assert report.read == 1
        assert report.stored == 1

    def test_unknown_source_rejected(self, platform):
        line = doc_line(0, source_name="pirate-radio")
        report = platform.ingest_records([line])
        assert report.reasons == {"unknown_source": 1}

    def test_explicit_media_type_beats_registry(self, platform):
        line = doc_line(0, source_name="pirate-radio", media_type="social")
        report = platform.ingest_records([line])
        assert report.stored == 1
        assert platform.store.snapshot()[0].media_type == "social"

    def test_duplicates_within_and_across_batches(self, platform):
        report = platform.ingest_records([doc_line(0), doc_line(0)])
        assert (report.stored, report.duplicates) == (1, 1)
        again = platform.ingest_records([doc_line(0)])
        assert (again.stored, again.duplicates) == (0, 1)

    def test_rejection_reasons_accumulate(self, platform):
        report = platform.ingest_records(
            [doc_line(0, url=""), doc_line(1, content="<p></p>")]
        )
        assert report.reasons == {"missing_url": 1, "empty_content": 1}
        assert report.read == report.stored + report.rejected + report.duplicates

    def test_report_jsonable(self, platform):
        report = platform.ingest_records([doc_line(0), "{bad"])
        payload = report.to_jsonable()
        assert payload == {
            "read": 2,
            "stored": 1,
            "rejected": 1,
            "duplicates": 0,
            "reasons": {"malformed_line": 1},
        }

    def test_ingest_path_reads_file(self, platform, tmp_path):
        path = tmp_path / "batch.jsonl"
        path.write_text(doc_line(0) + "\n" + doc_line(1) + "\n", encoding="utf-8")
        assert platform.ingest_path(path).stored == 2


class TestEnrichment:
    def test_fields_filled(self, platform):
        platform.ingest_records([doc_line(0)])
        doc = platform.store.snapshot()[0]
        assert doc.primary_region == "hubei"  # wuhan resolves to its province
        assert doc.regions == ("hubei",)
        assert 0 < len(doc.keywords) <= 10
        assert "wuhan" in doc.keywords
        assert doc.abstract
        assert doc.sentiment_label == "positive"
        assert doc.sentiment_score > 0
        assert doc.model_probability is None  # no classifier configured

    def test_multi_region_mentions(self, platform):
        line = doc_line(
            0,
            title="joint notice",
            content="wuhan and guangzhou and wuhan coordinate the response。",
        )
        platform.ingest_records([line])
        doc = platform.store.snapshot()[0]
        assert doc.regions == ("guangdong", "hubei")
        assert doc.primary_region == "hubei"  # two mentions beat one

    def test_negative_document(self, platform):
        line = doc_line(0, title="complaint", content="the service was terrible。")
        platform.ingest_records([line])
        doc = platform.store.snapshot()[0]
        assert doc.sentiment_label == "negative"
        assert doc.sentiment_score < 0

    def test_abstract_caps_at_three_sentences(self, platform):
        content = "one good outcome。two fine results。three great steps。four more notes。five bad turns。"
        platform.ingest_records([doc_line(0, content=content)])
        doc = platform.store.snapshot()[0]
        assert doc.abstract.count("。") == 3

    def test_no_gazetteer_leaves_regions_empty(self, tmp_path):
        platform = Platform(fixture_config(tmp_path, gazetteer=None))
        platform.ingest_records([doc_line(0)])
        doc = platform.store.snapshot()[0]
        assert doc.primary_region is None
        assert doc.regions == ()


class TestClassifyText:
    def test_lexicon_fields(self, platform):
        result = platform.classify_text("really great。")
        assert result["lexicon"]["score"] == pytest.approx(2.0 * 1.75)
        assert result["lexicon"]["label"] == "positive"
        assert result["model"] is None

    def test_zero_score_is_negative(self, platform):
        result = platform.classify_text("")
        assert result["lexicon"]["score"] == 0.0
        assert result["lexicon"]["label"] == "negative"

    def test_needs_lexicons(self, tmp_path):
        bare = Platform(
            AppConfig(
                data_dir=str(tmp_path / "data"),
                sources=str(FIXTURES / "sources.csv"),
            )
        )
        with pytest.raises(ConfigError):
            bare.classify_text("good")

    def test_vocab_falls_back_to_lexicon_words(self, tmp_path):
        platform = Platform(fixture_config(tmp_path, segmenter_vocab=None))
        result = platform.classify_text("reallygreat")
        assert result["lexicon"]["score"] == pytest.approx(3.5)


class TestAnalyticsFacade:
    def seed(self, platform):
        lines = [
            doc_line(i, published_at=f"2021-03-0{1 + i % 3}T10:00:00Z")
            for i in range(6)
        ]
        platform.ingest_records(lines)

    def test_trends_default_range_covers_cohort(self, platform):
        self.seed(platform)
        points = platform.trends()
        assert points[0].date.isoformat() == "2021-03-01"
        assert points[-1].date.isoformat() == "2021-03-03"
        assert sum(p.count for p in points) == 6

    def test_trends_explicit_range(self, platform):
        self.seed(platform)
        points = platform.trends(date_from="2021-03-02", date_to="2021-03-05")
        assert len(points) == 4
        assert points[-1].count == 0

    def test_trends_empty_store(self, platform):
        assert platform.trends() == []

    def test_trends_keyword_filter(self, platform):
        self.seed(platform)
        assert platform.trends(keyword="no-such-word") == []

    def test_region_stats_facade(self, platform):
        self.seed(platform)
        stats = platform.region_stats()
        assert stats[0].region == "hubei"
        assert stats[0].count == 6

    def test_media_summary_facade(self, platform):
        self.seed(platform)
        summary = platform.media_summary()
        assert list(summary) == ["mass"]
        assert summary["mass"]["count"] == 6

    def test_reclassify_rewrites_all(self, platform):
        self.seed(platform)
        assert platform.reclassify() == 6
        assert platform.store.snapshot()[0].sentiment_label is not None


class TestCLI:
    def test_no_command_is_usage_error(self):
        assert run([]) == 2

    def test_unknown_command_is_usage_error(self):
        assert run(["definitely-not-a-command"]) == 2

    def test_ingest_reports_json(self, tmp_path, capsys):
        cfg = write_config_file(tmp_path)
        docs = tmp_path / "docs.jsonl"
        docs.write_text(doc_line(0) + "\n" + doc_line(1) + "\n", encoding="utf-8")
        assert run(["--config", str(cfg), "ingest", str(docs)]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["stored"] == 2

    def test_ingest_missing_file_fails(self, tmp_path, capsys):
        cfg = write_config_file(tmp_path)
        assert run(["--config", str(cfg), "ingest", str(tmp_path / "nope.jsonl")]) == 1
        assert "error:" in capsys.readouterr().err

    def test_classify_text(self, tmp_path, capsys):
        cfg = write_config_file(tmp_path)
        assert run(["--config", str(cfg), "classify", "really great。"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["lexicon"]["label"] == "positive"

    def test_classify_reads_file_argument(self, tmp_path, capsys):
        cfg = write_config_file(tmp_path)
        text_file = tmp_path / "snippet.txt"
        text_file.write_text("the service was terrible。", encoding="utf-8")
        assert run(["--config", str(cfg), "classify", str(text_file)]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["lexicon"]["label"] == "negative"

    def test_trends_after_ingest(self, tmp_path, capsys):
        cfg = write_config_file(tmp_path)
        docs = tmp_path / "docs.jsonl"
        docs.write_text("\n".join(doc_line(i) for i in range(3)) + "\n", encoding="utf-8")
        assert run(["--config", str(cfg), "ingest", str(docs)]) == 0
        capsys.readouterr()
        assert run(["--config", str(cfg), "trends"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload == [{"date": "2021-03-02", "count": 3, "ppr": 0.5}]

    def test_regions_flags(self, tmp_path, capsys):
        cfg = write_config_file(tmp_path)
        docs = tmp_path / "docs.jsonl"
        docs.write_text(doc_line(0) + "\n", encoding="utf-8")
        run(["--config", str(cfg), "ingest", str(docs)])
        capsys.readouterr()
        assert run(["--config", str(cfg), "regions", "--from", "2021-03-01"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload[0]["region"] == "hubei"

    def test_evaluate_with_lexicons(self, tmp_path, capsys):
        cfg = write_config_file(tmp_path)
        dataset = tmp_path / "labelled.jsonl"
        rows = [
            {"tokens": ["really", "great"], "label": "positive"},
            {"tokens": ["terrible"], "label": "negative"},
            {"tokens": ["good"], "label": "negative"},
        ]
        dataset.write_text(
            "\n".join(json.dumps(r) for r in rows) + "\n", encoding="utf-8"
        )
        assert run(["--config", str(cfg), "evaluate", str(dataset)]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["counts"] == {"tp": 1, "fp": 1, "fn": 0, "tn": 1}
        assert payload["precision"] == 0.5

    def test_evaluate_bad_label_fails(self, tmp_path, capsys):
        cfg = write_config_file(tmp_path)
        dataset = tmp_path / "labelled.jsonl"
        dataset.write_text('{"tokens": ["good"], "label": "meh"}\n', encoding="utf-8")
        assert run(["--config", str(cfg), "evaluate", str(dataset)]) == 1
        assert "error:" in capsys.readouterr().err

    def test_train_embeddings_then_classifier(self, tmp_path, capsys):
        cfg = write_config_file(tmp_path)
        corpus = tmp_path / "corpus.jsonl"
        rows = []
        for i in range(30):
            rows.append({"tokens": ["good", "great", "fine", f"w{i % 3}"]})
            rows.append({"tokens": ["bad", "awful", "terrible", f"v{i % 3}"]})
        corpus.write_text("\n".join(json.dumps(r) for r in rows) + "\n", encoding="utf-8")
        emb_path = tmp_path / "vectors.txt"
        code = run(
            [
                "--config", str(cfg), "train-embeddings", str(corpus),
                "--out", str(emb_path), "--dim", "8", "--epochs", "8",
                "--window", "2", "--negatives", "2",
            ]
        )
        assert code == 0
        emb_report = json.loads(capsys.readouterr().out)
        assert emb_report["dim"] == 8
        assert emb_path.exists()

        dataset = tmp_path / "labelled.jsonl"
        rows = []
        for i in range(20):
            rows.append({"tokens": ["good", "great"], "label": "positive"})
            rows.append({"tokens": ["bad", "awful"], "label": "negative"})
        dataset.write_text("\n".join(json.dumps(r) for r in rows) + "\n", encoding="utf-8")
        model_path = tmp_path / "model.txt"
        code = run(
            [
                "--config", str(cfg), "train-classifier", str(dataset),
                "--embeddings", str(emb_path), "--out", str(model_path),
                "--kind", "svm", "--epochs", "10", "--lr", "0.5",
            ]
        )
        assert code == 0
        train_report = json.loads(capsys.readouterr().out)
        assert train_report["kind"] == "svm"
        assert len(train_report["epoch_losses"]) == 10
        assert model_path.exists()

        code = run(
            [
                "--config", str(cfg), "evaluate", str(dataset),
                "--model", str(model_path), "--embeddings", str(emb_path),
            ]
        )
        assert code == 0
        eval_report = json.loads(capsys.readouterr().out)
        assert eval_report["f1"] == 1.0

    def test_train_classifier_report_file(self, tmp_path, capsys):
        cfg = write_config_file(tmp_path)
        corpus = tmp_path / "corpus.jsonl"
        corpus.write_text(
            "\n".join(
                json.dumps({"tokens": ["good", "bad", f"w{i}"]}) for i in range(10)
            )
            + "\n",
            encoding="utf-8",
        )
        emb_path = tmp_path / "vectors.txt"
        run(
            [
                "--config", str(cfg), "train-embeddings", str(corpus),
                "--out", str(emb_path), "--dim", "4", "--epochs", "1",
            ]
        )
        dataset = tmp_path / "labelled.jsonl"
        dataset.write_text(
            json.dumps({"tokens": ["good"], "label": "positive"})
            + "\n"
            + json.dumps({"tokens": ["bad"], "label": "negative"})
            + "\n",
            encoding="utf-8",
        )
        capsys.readouterr()
        report_path = tmp_path / "report.json"
        code = run(
            [
                "--config", str(cfg), "train-classifier", str(dataset),
                "--embeddings", str(emb_path), "--out", str(tmp_path / "m.txt"),
                "--kind", "mlp", "--epochs", "1", "--report", str(report_path),
            ]
        )
        assert code == 0
        capsys.readouterr()
        assert json.loads(report_path.read_text(encoding="utf-8"))["kind"] == "mlp"

    def test_reclassify_command(self, tmp_path, capsys):
        cfg = write_config_file(tmp_path)
        docs = tmp_path / "docs.jsonl"
        docs.write_text(doc_line(0) + "\n", encoding="utf-8")
        run(["--config", str(cfg), "ingest", str(docs)])
        capsys.readouterr()
        assert run(["--config", str(cfg), "reclassify"]) == 0
        assert json.loads(capsys.readouterr().out) == {"reclassified": 1}
