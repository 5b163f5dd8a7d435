import json
import socket
import subprocess
import sys
import time
import urllib.request
from pathlib import Path

import pytest

from biotimelines.cli import main

from test_kg_store import PERSON_ROW, write_dump


@pytest.fixture(scope="module")
def trained_dir(fixture_dir, tmp_path_factory):
    """Run benchmark + both trainings once; several tests reuse the artifacts."""
    root = tmp_path_factory.mktemp("pipeline")
    bench = root / "benchmark.jsonl"
    assert main([
        "benchmark", str(fixture_dir / "mini_ekg"), str(fixture_dir / "corpus"),
        "--out", str(bench),
    ]) == 0
    models = root / "models"
    for source in ("wikipedia", "bio_web"):
        assert main([
            "train", str(bench), "--data", str(fixture_dir / "mini_ekg"),
            "--source", source, "--out", str(models / f"model.{source}.json"),
        ]) == 0
    return root


class TestValidate:
    def test_fixture_reports_counts(self, fixture_dir, capsys):
        assert main(["validate", str(fixture_dir / "mini_ekg")]) == 0
        out = capsys.readouterr().out
        assert "50 persons" in out

    def test_missing_file_fails(self, tmp_path):
        assert main(["validate", str(tmp_path)]) == 1

    def test_dangling_id_named_in_report(self, tmp_path, capsys):
        dump = write_dump(
            tmp_path, entities=[PERSON_ROW], facts=["P1\tknows\tKnows\tentity\tQX\t\t"]
        )
        assert main(["validate", str(dump)]) == 1
        assert "QX" in capsys.readouterr().err


class TestBenchmark:
    def test_summary_printed(self, trained_dir, capsys):
        data = json.loads((trained_dir / "benchmark.jsonl").read_text().splitlines()[0])
        assert data["person"]

    def test_empty_corpus_writes_empty_file(self, fixture_dir, tmp_path, capsys):
        out = tmp_path / "empty.jsonl"
        corpus = tmp_path / "corpus"
        corpus.mkdir()
        assert main([
            "benchmark", str(fixture_dir / "mini_ekg"), str(corpus), "--out", str(out)
        ]) == 0
        assert out.read_bytes() == b""

    def test_unknown_person_file_warns(self, fixture_dir, tmp_path, capsys):
        corpus = tmp_path / "corpus"
        (corpus / "wikipedia").mkdir(parents=True)
        (corpus / "wikipedia" / "Nobody.txt").write_text("x in 1800.\n", encoding="utf-8")
        out = tmp_path / "b.jsonl"
        assert main([
            "benchmark", str(fixture_dir / "mini_ekg"), str(corpus), "--out", str(out)
        ]) == 0
        assert "Nobody" in capsys.readouterr().err


class TestTrain:
    def test_writes_model_and_schema(self, trained_dir):
        models = trained_dir / "models"
        for source in ("wikipedia", "bio_web"):
            doc = json.loads((models / f"model.{source}.json").read_text())
            assert list(doc) == ["source", "lambda", "epochs", "seed", "bias", "weights",
                                 "schema_hash"]
            assert doc["source"] == source
        schema = json.loads((models / "schema.json").read_text())
        assert schema["dimension"] == len(schema["property_vocab"]) + len(schema["type_vocab"]) + 9

    def test_reruns_byte_identical(self, fixture_dir, trained_dir, tmp_path):
        bench = trained_dir / "benchmark.jsonl"
        out1, out2 = tmp_path / "m1.json", tmp_path / "m2.json"
        for out in (out1, out2):
            assert main([
                "train", str(bench), "--data", str(fixture_dir / "mini_ekg"),
                "--source", "wikipedia", "--out", str(out), "--seed", "42",
            ]) == 0
        assert out1.read_bytes() == out2.read_bytes()

    def test_benchmark_reruns_byte_identical(self, fixture_dir, trained_dir, tmp_path):
        again = tmp_path / "again.jsonl"
        assert main([
            "benchmark", str(fixture_dir / "mini_ekg"), str(fixture_dir / "corpus"),
            "--out", str(again),
        ]) == 0
        assert again.read_bytes() == (trained_dir / "benchmark.jsonl").read_bytes()


class TestTimeline:
    def test_export_document_written(self, fixture_dir, trained_dir, tmp_path):
        out = tmp_path / "adams.json"
        assert main([
            "timeline", str(fixture_dir / "mini_ekg"), str(trained_dir / "models"),
            "JohnAdams", "--out", str(out), "--timestamp", "2026-01-01T00:00:00Z",
        ]) == 0
        doc = json.loads(out.read_text(encoding="utf-8"))
        assert doc["person"]["id"] == "JohnAdams"
        assert doc["generated_at"] == "2026-01-01T00:00:00Z"
        assert len(doc["entries"]) >= 1
        assert doc["model_source"] == "wikipedia"

    def test_reruns_byte_identical_with_pinned_timestamp(
        self, fixture_dir, trained_dir, tmp_path
    ):
        outs = []
        for name in ("a.json", "b.json"):
            out = tmp_path / name
            assert main([
                "timeline", str(fixture_dir / "mini_ekg"), str(trained_dir / "models"),
                "JohnAdams", "--model", "bio_web", "--out", str(out),
                "--timestamp", "2026-01-01T00:00:00Z",
            ]) == 0
            outs.append(out.read_bytes())
        assert outs[0] == outs[1]

    def test_unknown_person_fails(self, fixture_dir, trained_dir, tmp_path, capsys):
        assert main([
            "timeline", str(fixture_dir / "mini_ekg"), str(trained_dir / "models"),
            "Nobody", "--out", str(tmp_path / "x.json"),
        ]) == 1
        assert "Nobody" in capsys.readouterr().err


def _free_port() -> int:
    with socket.socket() as sock:
        sock.bind(("127.0.0.1", 0))
        return sock.getsockname()[1]


class TestServe:
    def test_serve_smoke(self, fixture_dir, trained_dir):
        port = _free_port()
        proc = subprocess.Popen(
            [
                sys.executable, "-m", "biotimelines.cli", "serve",
                "--data", str(fixture_dir / "mini_ekg"),
                "--models", str(trained_dir / "models"),
                "--port", str(port),
            ],
            stdout=subprocess.PIPE,
            stderr=subprocess.STDOUT,
        )
        try:
            base = f"http://127.0.0.1:{port}"
            deadline = time.time() + 15
            body = None
            while time.time() < deadline:
                try:
                    with urllib.request.urlopen(f"{base}/api/persons?q=adams") as resp:
                        body = json.loads(resp.read())
                    break
                except Exception:
                    if proc.poll() is not None:
                        raise AssertionError(proc.stdout.read().decode(errors="replace"))
                    time.sleep(0.2)
            assert body is not None, "server never came up"
            assert body[0]["id"] == "JohnAdams"
            with urllib.request.urlopen(f"{base}/api/timeline/JohnAdams") as resp:
                assert resp.headers["cache"] == "miss"
            with urllib.request.urlopen(f"{base}/api/timeline/JohnAdams") as resp:
                assert resp.headers["cache"] == "hit"
        finally:
            proc.terminate()
            proc.wait(timeout=10)
