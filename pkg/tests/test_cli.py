import json

from docloop.cli import main


def test_gen_then_augment(tmp_path):
    gen_dir = tmp_path / "generated"
    assert main([
        "gen", "--class", "pan_v1", "--count", "3", "--seed", "5", "--out", str(gen_dir),
    ]) == 0
    assert (gen_dir / "images" / "pan_v1" / "pan_v1_3.png").exists()

    out_dir = tmp_path / "dataset"
    assert main(["augment", "--in", str(gen_dir), "--out", str(out_dir)]) == 0
    total = sum(
        len(list((out_dir / "data" / "images" / split).iterdir()))
        for split in ("train", "validation", "test")
    )
    assert total == 42


def test_split_table(capsys):
    assert main(["split", "--total", "100"]) == 0
    out = capsys.readouterr().out
    assert "train" in out and "70" in out
    assert "validation" in out and "test" in out


def test_eval_oracle(small_dataset, tmp_path, capsys):
    report_path = tmp_path / "report.json"
    assert main([
        "eval", "--dataset", str(small_dataset), "--split", "test",
        "--backend", "oracle", "--out", str(report_path),
    ]) == 0
    payload = json.loads(report_path.read_text())
    assert payload["accuracy"] == 1.0
    assert payload["mean_validation_ratio"] == 1.0


def test_eval_unknown_backend(small_dataset):
    assert main(["eval", "--dataset", str(small_dataset), "--backend", "neural"]) == 2


def test_simulate(small_dataset, capsys):
    assert main([
        "simulate", "--dataset", str(small_dataset), "--rounds", "2", "--seed", "3",
    ]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert len(payload["accuracy_per_round"]) == 2
    assert payload["accuracy_per_round"][-1] == 1.0


def test_assemble(small_dataset, tmp_path, capsys):
    from docloop import FeedbackStore

    rejected = tmp_path / "rejected_pipeline"
    FeedbackStore(tmp_path / "requests", rejected)
    out = tmp_path / "merged"
    assert main([
        "assemble", "--base", str(small_dataset), "--rejected", str(rejected),
        "--out", str(out),
    ]) == 0
    summary = json.loads(capsys.readouterr().out)
    assert summary["rejected_count"] == 0
    assert (out / "data" / "images" / "train").exists()
