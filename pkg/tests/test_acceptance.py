"""Acceptance gate: one test per shipped guarantee.

Every numeric bar below was computed by an independent oracle (scalar
arithmetic, finite differences, or a direct recount) before the
implementation was allowed to claim it.
"""
import json
import math
import shutil
import time
from datetime import date, datetime, timedelta, timezone
from pathlib import Path

import numpy as np
import pytest

from sentimarket.cli import main as cli_main
from sentimarket.evaluation import SyntheticScenario, backtest, generate_synthetic
from sentimarket.forecast import (
    LstmParameters,
    TrainConfig,
    arima_fit,
    init_parameters,
    loss_and_gradients,
    lstm_step,
)
from sentimarket.forecast.lstm import batch_loss, perturbed
from sentimarket.market import fill_calendar, parse_ohlc
from sentimarket.market.denoise import denoise_values, rmse, snr_db
from sentimarket.market.prices import OBSERVED, PriceSeries
from sentimarket.market.wavelet import wavelet_forward, wavelet_inverse
from sentimarket.sentiment import center
from sentimarket.sentiment.series import BUCKET_DAILY, SentimentSeries

DATA = Path(__file__).resolve().parent.parent / "data"


def test_bptt_gradients_match_finite_differences():
    """Analytic gradients vs central differences: 50 draws, < 1e-5, < 30 s."""
    started = time.monotonic()
    rng = np.random.default_rng(11)
    eps = 1e-5
    worst = 0.0
    for draw in range(50):
        hidden = 2 if draw % 2 == 0 else 8
        features = int(rng.integers(1, 3))
        params = init_parameters(hidden, features, seed=int(rng.integers(1, 10_000)))
        batch = int(rng.integers(2, 5))
        inputs = rng.normal(size=(batch, 3, features))
        targets = rng.normal(size=batch)
        _, grads = loss_and_gradients(params, inputs, targets)
        for name, value in params.items():
            shape = np.shape(value)
            for index in np.ndindex(shape if shape else (1,)):
                idx = index if shape else ()
                up = batch_loss(perturbed(params, name, idx, eps), inputs, targets)
                down = batch_loss(perturbed(params, name, idx, -eps), inputs, targets)
                numeric = (up - down) / (2 * eps)
                grad_field = getattr(grads, name)
                analytic = grad_field[idx] if shape else float(grad_field)
                rel = abs(analytic - numeric) / max(
                    abs(analytic), abs(numeric), 1e-4
                )
                worst = max(worst, rel)
    elapsed = time.monotonic() - started
    assert worst < 1e-5, f"worst relative gradient error {worst:.3e}"
    assert elapsed < 30.0, f"gradient check took {elapsed:.1f}s"


def test_lstm_cell_hand_computation():
    """hidden=1 cell against a scalar oracle evaluated right here."""
    sigmoid = lambda z: 1.0 / (1.0 + math.exp(-z))
    # zero inputs and zero weights except a +1 bias into the candidate:
    # every gate sits at sigmoid(0), the candidate at tanh(1)
    expected_c = sigmoid(0.0) * math.tanh(1.0)
    expected_h = sigmoid(0.0) * math.tanh(expected_c)
    zeros = {name: np.zeros(shape) for name, shape in (
        ("w_if", (1, 1)), ("w_hf", (1, 1)), ("b_if", (1,)), ("b_hf", (1,)),
        ("w_ii", (1, 1)), ("w_hi", (1, 1)), ("b_ii", (1,)), ("b_hi", (1,)),
        ("w_io", (1, 1)), ("w_ho", (1, 1)), ("b_io", (1,)), ("b_ho", (1,)),
        ("w_ig", (1, 1)), ("w_hg", (1, 1)), ("b_ig", (1,)), ("b_hg", (1,)),
    )}
    zeros["b_hg"] = np.array([1.0])
    params = LstmParameters(readout_w=np.zeros(1), readout_b=0.0, **zeros)
    state = lstm_step(params, np.zeros(1), np.zeros(1), np.zeros(1))
    assert state.c_t[0] == pytest.approx(expected_c, abs=1e-6)
    assert state.h_t[0] == pytest.approx(expected_h, abs=1e-6)
    assert state.c_t[0] == pytest.approx(0.380797, abs=1e-6)


def test_wavelet_round_trip_and_constant_fixed_point():
    rng = np.random.default_rng(7)
    lengths = [32, 33, 64, 100, 128, 255, 256, 311, 512]
    for n in lengths:
        x = rng.normal(size=n) * 10.0
        pyramid = wavelet_forward(x, levels=3)
        back = wavelet_inverse(pyramid)
        assert np.max(np.abs(back - x)) < 1e-9, f"round trip broke at n={n}"
    const = np.full(64, 42.5)
    out, _ = denoise_values(const, levels=3, threshold_scale=1.0)
    assert np.max(np.abs(out - const)) < 1e-9


def test_snr_and_rmse_hand_case():
    x = np.array([1.0, 1.0, 1.0, 1.0])
    xhat = np.array([1.0, 1.0, 1.0, 0.0])
    assert snr_db(x, xhat) == pytest.approx(6.0206, abs=1e-3)
    assert rmse(x, xhat) == pytest.approx(0.5, abs=1e-9)


def test_gap_fill_exact_on_low_degree_polynomials():
    rng = np.random.default_rng(13)
    base = date(2020, 3, 1).toordinal()
    for trial in range(10):
        degree = trial % 4
        coeffs = rng.uniform(-1.0, 1.0, size=degree + 1) * [1.0, 1.0, 0.1, 0.01][: degree + 1]
        keep = sorted(rng.choice(np.arange(1, 29), size=10, replace=False).tolist())
        keep = [0] + keep + [29]

        def poly(day):
            return 500.0 + sum(c * day ** k for k, c in enumerate(coeffs))

        dates = tuple(date.fromordinal(base + d) for d in keep)
        closes = tuple(poly(d) for d in keep)
        series = PriceSeries(
            date=dates,
            open=closes,
            high=tuple(c + 1.0 for c in closes),
            low=tuple(c - 1.0 for c in closes),
            close=closes,
            volume=tuple(1000.0 for _ in closes),
            provenance=tuple(OBSERVED for _ in closes),
        )
        filled = fill_calendar(series)
        assert len(filled) == 30
        kept_set = set(keep)
        for i, d in enumerate(filled.date):
            day = d.toordinal() - base
            if day in kept_set:
                j = keep.index(day)
                assert filled.close[i] == closes[j]  # untouched, bit for bit
            else:
                assert abs(filled.close[i] - poly(day)) < 1e-9


def test_centering_mean_and_order_invariance():
    rng = np.random.default_rng(29)
    epoch = datetime(2020, 1, 1, tzinfo=timezone.utc)
    for _ in range(1000):
        n = int(rng.integers(2, 120))
        series = SentimentSeries(
            bucket_start=tuple(epoch + timedelta(days=i) for i in range(n)),
            score=tuple(rng.uniform(-1, 1, size=n).tolist()),
            count=tuple([1] * n),
            bucket=BUCKET_DAILY,
            centered=False,
        )
        centered = center(series)
        assert abs(np.mean(centered.score)) < 1e-12
        assert np.argsort(series.score).tolist() == np.argsort(centered.score).tolist()


def test_arima_recovers_ar1_coefficient():
    for seed in range(10):
        rng = np.random.default_rng(seed)
        y = [0.0]
        for _ in range(499):
            y.append(0.8 * y[-1] + float(rng.normal()))
        fitted = arima_fit(np.array(y), order=(1, 0, 0))
        assert fitted.coefficients[0] == pytest.approx(0.8, abs=0.1), (
            f"seed {seed}: phi={fitted.coefficients[0]:.3f}"
        )


def test_sentiment_fusion_separates_on_coupled_data():
    """On data where sentiment drives returns, the fused model must beat
    the price-only model by at least ten accuracy points on average."""
    started = time.monotonic()
    config = TrainConfig(returns_mode=True)
    lstm_acc, slstm_acc = [], []
    for seed in range(1, 21):
        prices, senti = generate_synthetic(
            SyntheticScenario(length=400, beta=0.05, sigma=0.01, seed=seed)
        )
        centered = center(senti)
        start, end = prices.date[303], prices.date[-1]
        lstm_acc.append(
            backtest("lstm", prices, None, start, end, config).direction_accuracy
        )
        slstm_acc.append(
            backtest("s-lstm", prices, centered, start, end, config).direction_accuracy
        )
    elapsed = time.monotonic() - started
    separation = float(np.mean(slstm_acc)) - float(np.mean(lstm_acc))
    assert separation >= 0.10, (
        f"mean s-lstm {np.mean(slstm_acc):.4f} vs lstm {np.mean(lstm_acc):.4f}"
    )
    assert elapsed < 180.0, f"separation run took {elapsed:.1f}s"


def test_no_model_beats_a_random_walk():
    """With no sentiment coupling the walk is unpredictable; every model
    must average near coin-flip direction accuracy."""
    config = TrainConfig(returns_mode=True)
    accs = {"lstm": [], "s-lstm": [], "arima": [], "persistence": []}
    for seed in range(1, 21):
        prices, senti = generate_synthetic(
            SyntheticScenario(length=400, beta=0.0, sigma=0.01, seed=seed)
        )
        centered = center(senti)
        start, end = prices.date[303], prices.date[-1]
        for kind in accs:
            sentiment = centered if kind == "s-lstm" else None
            report = backtest(kind, prices, sentiment, start, end, config)
            accs[kind].append(report.direction_accuracy)
    for kind, values in accs.items():
        mean = float(np.mean(values))
        assert 0.45 <= mean <= 0.55, f"{kind} mean direction accuracy {mean:.4f}"


def test_cli_reruns_are_byte_identical(tmp_path, monkeypatch):
    outputs = (
        "ohlc.csv", "ohlc.csv.manifest.json",
        "senti.csv", "senti.csv.manifest.json",
        "model.json", "model.json.manifest.json",
    )
    snapshots = []
    for run_dir in ("a", "b"):
        workdir = tmp_path / run_dir
        workdir.mkdir()
        monkeypatch.chdir(workdir)
        assert cli_main([
            "synth", "--out", "ohlc.csv", "--sentiment-out", "senti.csv",
            "--length", "200", "--beta", "0.05", "--sigma", "0.01", "--seed", "6",
        ]) == 0
        assert cli_main([
            "train", "--prices", "ohlc.csv", "--out", "model.json",
            "--epochs", "40", "--hidden", "8", "--seed", "6",
        ]) == 0
        snapshots.append({name: (workdir / name).read_bytes() for name in outputs})
    assert snapshots[0] == snapshots[1]


def test_end_to_end_on_bundled_fixtures(tmp_path, monkeypatch):
    """filter -> score -> aggregate -> fill -> denoise -> train -> backtest
    on the shipped 60-day sample data, in under two minutes."""
    started = time.monotonic()
    shutil.copy(DATA / "sample_tweets.csv", tmp_path / "tweets.csv")
    shutil.copy(DATA / "sample_ohlc.csv", tmp_path / "ohlc.csv")
    monkeypatch.chdir(tmp_path)

    steps = [
        ["filter", "--in", "tweets.csv", "--out", "kept.csv"],
        ["score", "--in", "kept.csv", "--out", "scored.csv"],
        ["aggregate", "--in", "scored.csv", "--out", "daily.csv",
         "--bucket", "30min", "--daily-from-buckets", "--center"],
        ["fill", "--in", "ohlc.csv", "--out", "filled.csv"],
        ["denoise", "--in", "filled.csv", "--out", "smooth.csv"],
        ["train", "--prices", "smooth.csv", "--model", "s-lstm",
         "--sentiment", "daily.csv", "--out", "model.json", "--seed", "1"],
        ["backtest", "--prices", "smooth.csv", "--model", "s-lstm",
         "--sentiment", "daily.csv", "--start", "2020-04-21",
         "--end", "2020-04-30", "--out", "report.json",
         "--rows-out", "rows.csv", "--seed", "1"],
    ]
    for argv in steps:
        assert cli_main(argv) == 0, f"step failed: {argv[0]}"

    report = json.loads((tmp_path / "report.json").read_text())
    assert report["model"] == "s-lstm"
    assert 0.0 <= report["direction_accuracy"] <= 1.0
    assert 0.0 <= report["f1_up"] <= 1.0
    assert report["mean_relative_error"] >= 0.0
    assert report["relative_accuracy"] <= 1.0
    rows = (tmp_path / "rows.csv").read_text().splitlines()
    assert rows[0] == "date,truth,predicted"
    assert len(rows) == 11

    smooth = parse_ohlc(tmp_path / "smooth.csv")
    assert smooth.is_contiguous() and len(smooth) == 60

    elapsed = time.monotonic() - started
    assert elapsed < 120.0, f"pipeline took {elapsed:.1f}s"
