import hashlib
import json

import pytest

from sentimarket.cli import main


@pytest.fixture
def workdir(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    return tmp_path


def run(*argv):
    return main(list(argv))


def test_pipeline_happy_path(workdir, capsys):
    assert run(
        "synth", "--out", "ohlc.csv", "--sentiment-out", "senti.csv",
        "--length", "120", "--beta", "0.05", "--sigma", "0.01", "--seed", "3",
    ) == 0
    assert run("ingest", "--in", "ohlc.csv", "--out", "ingested.csv") == 0
    assert run("fill", "--in", "ingested.csv", "--out", "filled.csv") == 0
    assert run(
        "denoise", "--in", "filled.csv", "--out", "smooth.csv",
        "--report", "den.json",
    ) == 0
    assert run(
        "train", "--prices", "smooth.csv", "--out", "model.json",
        "--epochs", "10", "--hidden", "4", "--seed", "2",
    ) == 0
    assert run("predict", "--model", "model.json", "--prices", "smooth.csv") == 0
    assert run(
        "backtest", "--prices", "smooth.csv", "--model", "persistence",
        "--start", "2020-04-01", "--end", "2020-04-20",
        "--out", "report.json", "--rows-out", "rows.csv",
    ) == 0

    out = capsys.readouterr().out
    assert '"prediction"' in out
    assert '"direction_accuracy"' in out
    report = json.loads((workdir / "report.json").read_text())
    assert report["model"] == "persistence"
    rows = (workdir / "rows.csv").read_text().splitlines()
    assert rows[0] == "date,truth,predicted"
    assert len(rows) == 21


def test_every_output_has_a_manifest(workdir):
    run("synth", "--out", "ohlc.csv", "--sentiment-out", "senti.csv",
        "--length", "100", "--seed", "7")
    for name in ("ohlc.csv", "senti.csv"):
        manifest = json.loads((workdir / f"{name}.manifest.json").read_text())
        digest = hashlib.sha256((workdir / name).read_bytes()).hexdigest()
        assert manifest["outputs"][name] == digest
        assert manifest["seed"] == 7
        assert manifest["command"] == "sentimarket"
        assert "--seed" in manifest["args"]


def test_rerun_is_byte_identical(workdir):
    args = ("synth", "--out", "a.csv", "--length", "100", "--seed", "9")
    run(*args)
    first = (workdir / "a.csv").read_bytes()
    first_manifest = (workdir / "a.csv.manifest.json").read_bytes()
    run(*args)
    assert (workdir / "a.csv").read_bytes() == first
    assert (workdir / "a.csv.manifest.json").read_bytes() == first_manifest


def test_train_rerun_byte_identical(workdir):
    run("synth", "--out", "ohlc.csv", "--length", "100", "--seed", "3")
    args = ("train", "--prices", "ohlc.csv", "--out", "m.json",
            "--epochs", "8", "--hidden", "4", "--seed", "5")
    run(*args)
    first = (workdir / "m.json").read_bytes()
    run(*args)
    assert (workdir / "m.json").read_bytes() == first


def test_slstm_without_sentiment_is_usage_error(workdir, capsys):
    (workdir / "p.csv").write_text("date,open,high,low,close,volume\n")
    code = run("train", "--model", "s-lstm", "--prices", "p.csv", "--out", "m.json")
    assert code == 1
    assert "s-lstm requires --sentiment" in capsys.readouterr().err


def test_unknown_flag_exits_1(workdir, capsys):
    assert run("synth", "--out", "x.csv", "--bogus") == 1
    assert "error" in capsys.readouterr().err


def test_unknown_subcommand_exits_1(workdir, capsys):
    assert run("frobnicate") == 1


def test_missing_input_exits_2(workdir, capsys):
    assert run("ingest", "--in", "nope.csv", "--out", "x.csv") == 2
    assert "cannot read" in capsys.readouterr().err


def test_bad_data_exits_2(workdir, capsys):
    (workdir / "bad.csv").write_text("date,open\n")
    assert run("ingest", "--in", "bad.csv", "--out", "x.csv") == 2
    assert "header" in capsys.readouterr().err
    assert not (workdir / "x.csv").exists()


def test_bad_order_exits_1(workdir, capsys):
    run("synth", "--out", "o.csv", "--length", "100", "--seed", "1")
    code = run("backtest", "--prices", "o.csv", "--model", "arima",
               "--start", "2020-03-01", "--end", "2020-03-10",
               "--out", "r.json", "--order", "five,one,zero")
    assert code == 1
    assert "--order" in capsys.readouterr().err


def test_bad_section_exits_1(workdir, capsys):
    (workdir / "t.csv").write_text("timestamp,text\n2020-03-02T09:00:00Z,hello\n")
    code = run("filter", "--in", "t.csv", "--out", "f.csv",
               "--sections", "epidemic,weather")
    assert code == 1
    assert "weather" in capsys.readouterr().err


def test_data_dir_env(workdir, monkeypatch):
    data = workdir / "data"
    data.mkdir()
    monkeypatch.setenv("SENTIMARKET_DATA_DIR", str(data))
    assert run("synth", "--out", "s.csv", "--length", "100", "--seed", "2") == 0
    assert (data / "s.csv").exists()
    assert not (workdir / "s.csv").exists()


def test_filter_score_aggregate_files(workdir, capsys):
    (workdir / "tweets.csv").write_text(
        "timestamp,text\n"
        "2020-03-02T09:00:00Z,Vaccine news lifts hopes\n"
        "2020-03-02T09:05:00Z,just coffee\n"
    )
    assert run("filter", "--in", "tweets.csv", "--out", "kept.csv") == 0
    assert "kept 1 of 2" in capsys.readouterr().out
    assert run("score", "--in", "kept.csv", "--out", "scored.csv") == 0
    assert run(
        "aggregate", "--in", "scored.csv", "--out", "daily.csv",
        "--bucket", "daily", "--center",
    ) == 0
    lines = (workdir / "daily.csv").read_text().splitlines()
    assert lines[0].startswith("#")


def test_predict_without_out_writes_nothing(workdir):
    run("synth", "--out", "o.csv", "--length", "100", "--seed", "1")
    run("train", "--prices", "o.csv", "--out", "m.json",
        "--epochs", "5", "--hidden", "3", "--seed", "1")
    before = sorted(p.name for p in workdir.iterdir())
    assert run("predict", "--model", "m.json", "--prices", "o.csv") == 0
    after = sorted(p.name for p in workdir.iterdir())
    assert before == after


def test_denoise_fill_first_handles_gaps(workdir):
    # weekend-style gap: fill-first makes the series contiguous before
    # denoising, so the output has every calendar day
    (workdir / "g.csv").write_text(
        "date,open,high,low,close,volume\n"
        + "".join(
            f"2020-03-{d:02d},10,11,9,10.5,100\n"
            for d in (2, 3, 4, 5, 6, 9, 10, 11, 12, 13)
        )
    )
    assert run("denoise", "--in", "g.csv", "--out", "d.csv", "--fill-first") == 0
    text = (workdir / "d.csv").read_text()
    assert "2020-03-07" in text and "2020-03-08" in text
