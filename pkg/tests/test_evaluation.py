"""Metrics, walk-forward backtests, synthetic generator."""
from __future__ import annotations

import json
from datetime import date, timedelta

import numpy as np
import pytest

from sentimarket.errors import DataError
from sentimarket.evaluation import (
    EvaluationReport,
    SyntheticScenario,
    backtest,
    build_report,
    direction_metrics,
    generate_synthetic,
    plot_csv_text,
    relative_error_accuracy,
)
from sentimarket.forecast import TrainConfig
from sentimarket.sentiment import center

QUICK = TrainConfig(epochs=30, hidden=6, seed=2)


class TestDirectionMetrics:
    def test_hand_confusion_matrix(self):
        # actual: up, down, down; predicted: up, up, down
        prev = [10.0, 10.0, 10.0]
        truth = [11.0, 9.0, 9.0]
        pred = [11.0, 11.0, 9.0]
        accuracy, f1 = direction_metrics(truth, pred, prev)
        assert accuracy == pytest.approx(2 / 3)
        # precision 1/2, recall 1/1
        assert f1 == pytest.approx(2 * (0.5 * 1.0) / 1.5)

    def test_perfect_prediction(self):
        prev = [10.0, 10.0, 10.0, 10.0]
        truth = [11.0, 9.0, 12.0, 8.0]
        accuracy, f1 = direction_metrics(truth, truth, prev)
        assert accuracy == 1.0
        assert f1 == 1.0

    def test_degenerate_all_down(self):
        prev = [10.0, 10.0]
        truth = [9.0, 8.0]
        pred = [9.5, 7.0]
        accuracy, f1 = direction_metrics(truth, pred, prev)
        assert accuracy == 1.0
        assert f1 == 0.0

    def test_tie_counts_as_down(self):
        accuracy, f1 = direction_metrics([10.0], [9.0], [10.0])
        # truth unchanged -> down; prediction down -> match
        assert accuracy == 1.0
        assert f1 == 0.0

    def test_permutation_equivariant(self):
        rng = np.random.default_rng(6)
        prev = rng.uniform(50, 150, 30).tolist()
        truth = [p * float(rng.uniform(0.97, 1.03)) for p in prev]
        pred = [p * float(rng.uniform(0.97, 1.03)) for p in prev]
        base = direction_metrics(truth, pred, prev)
        order = rng.permutation(30)
        shuffled = direction_metrics(
            [truth[i] for i in order], [pred[i] for i in order], [prev[i] for i in order]
        )
        assert shuffled == base

    def test_length_mismatch(self):
        with pytest.raises(DataError, match="length"):
            direction_metrics([1.0], [1.0, 2.0], [1.0])


class TestRelativeError:
    def test_one_percent(self):
        mean_err, acc = relative_error_accuracy([100.0], [101.0])
        assert mean_err == pytest.approx(0.01)
        assert acc == pytest.approx(0.99)

    def test_identity(self):
        mean_err, acc = relative_error_accuracy([3.0, 7.0], [3.0, 7.0])
        assert mean_err == 0.0
        assert acc == 1.0

    def test_scale_invariant(self):
        rng = np.random.default_rng(9)
        truth = rng.uniform(50, 150, 20)
        pred = truth * rng.uniform(0.9, 1.1, 20)
        base = relative_error_accuracy(truth.tolist(), pred.tolist())
        for c in (0.01, 3.0, 1e4):
            scaled = relative_error_accuracy((c * truth).tolist(), (c * pred).tolist())
            assert scaled[0] == pytest.approx(base[0], rel=1e-12)

    def test_zero_truth_names_date(self):
        with pytest.raises(DataError, match="2020-03-03"):
            relative_error_accuracy(
                [10.0, 0.0], [10.0, 1.0], dates=[date(2020, 3, 2), date(2020, 3, 3)]
            )

    def test_zero_truth_names_index_without_dates(self):
        with pytest.raises(DataError, match="index 1"):
            relative_error_accuracy([10.0, 0.0], [10.0, 1.0])


class TestEvaluationReport:
    def make(self):
        rows = [
            (date(2020, 9, 1), 100.0, 101.0),
            (date(2020, 9, 2), 102.0, 100.5),
        ]
        return build_report("lstm", rows, previous_close=[99.0, 100.0])

    def test_fields_assembled(self):
        report = self.make()
        assert report.model == "lstm"
        assert 0.0 <= report.direction_accuracy <= 1.0
        assert report.relative_accuracy == pytest.approx(
            1.0 - report.mean_relative_error
        )

    def test_json_sorted_keys(self):
        data = json.loads(self.make().to_json())
        assert list(data) == sorted(data)
        assert data["rows"][0]["date"] == "2020-09-01"

    def test_rows_csv(self):
        text = self.make().rows_csv_text()
        lines = text.splitlines()
        assert lines[0] == "date,truth,predicted"
        assert lines[1].startswith("2020-09-01,100.0,101.0")

    def test_invariants_enforced(self):
        rows = ((date(2020, 9, 1), 100.0, 101.0),)
        with pytest.raises(DataError, match="direction_accuracy"):
            EvaluationReport(
                model="x", direction_accuracy=1.5, f1_up=0.5,
                mean_relative_error=0.1, relative_accuracy=0.9, rows=rows,
            )
        with pytest.raises(DataError, match="at least one row"):
            EvaluationReport(
                model="x", direction_accuracy=0.5, f1_up=0.5,
                mean_relative_error=0.1, relative_accuracy=0.9, rows=(),
            )

    def test_plot_csv_merges_models(self):
        a = self.make()
        rows_b = [(d, t, p + 1.0) for d, t, p in a.rows]
        b = build_report("arima", rows_b, previous_close=[99.0, 100.0])
        text = plot_csv_text([a, b])
        lines = text.splitlines()
        assert lines[0] == "date,truth,pred_lstm,pred_arima"
        assert len(lines) == 3

    def test_plot_csv_rejects_mismatched_dates(self):
        a = self.make()
        rows_b = [(date(2020, 9, 5), 100.0, 101.0)]
        b = build_report("arima", rows_b, previous_close=[99.0])
        with pytest.raises(DataError, match="different dates"):
            plot_csv_text([a, b])


def synthetic_pair(seed=1, beta=0.05, sigma=0.01, length=80):
    prices, sent = generate_synthetic(
        SyntheticScenario(length=length, beta=beta, sigma=sigma, seed=seed)
    )
    return prices, center(sent)


class TestBacktest:
    def test_persistence_accuracy_matches_recount(self):
        prices, _ = synthetic_pair(seed=3)
        ts, te = prices.date[60], prices.date[-1]
        report = backtest("persistence", prices, None, ts, te)
        # persistence predicts the prior close, a tie, which labels down;
        # accuracy is therefore the fraction of actual down days
        closes = prices.close
        downs = [
            closes[i] <= closes[i - 1]
            for i in range(len(closes))
            if ts <= prices.date[i] <= te
        ]
        assert report.direction_accuracy == pytest.approx(sum(downs) / len(downs))

    def test_deterministic_rerun(self):
        prices, sent = synthetic_pair(seed=4)
        ts, te = prices.date[60], prices.date[-1]
        a = backtest("s-lstm", prices, sent, ts, te, QUICK)
        b = backtest("s-lstm", prices, sent, ts, te, QUICK)
        assert a.to_json() == b.to_json()

    def test_range_before_data_start(self):
        prices, _ = synthetic_pair()
        with pytest.raises(DataError, match="outside the data"):
            backtest(
                "persistence", prices, None,
                prices.date[0] - timedelta(days=30),
                prices.date[0] - timedelta(days=10),
            )

    def test_end_before_start(self):
        prices, _ = synthetic_pair()
        with pytest.raises(DataError, match="empty test range"):
            backtest("persistence", prices, None, prices.date[50], prices.date[10])

    def test_unknown_kind(self):
        prices, _ = synthetic_pair()
        with pytest.raises(DataError, match="unknown model kind"):
            backtest("tcn", prices, None, prices.date[60], prices.date[-1])

    def test_slstm_needs_sentiment(self):
        prices, _ = synthetic_pair()
        with pytest.raises(DataError, match="requires a sentiment series"):
            backtest("s-lstm", prices, None, prices.date[60], prices.date[-1])

    def test_arima_walk_forward_uses_only_past(self):
        prices, _ = synthetic_pair(seed=5)
        ts, te = prices.date[60], prices.date[-1]
        report = backtest("arima", prices, None, ts, te)
        assert len(report.rows) == len(prices.close) - 60
        # truncating future data must not change the first prediction
        from sentimarket.evaluation.backtest import _slice

        shorter = _slice(prices, 61)
        first = backtest("arima", shorter, None, ts, prices.date[60]).rows[0]
        assert first == report.rows[0]

    def test_lstm_backtest_report_wellformed(self):
        prices, _ = synthetic_pair(seed=6)
        ts, te = prices.date[64], prices.date[-1]
        report = backtest("lstm", prices, None, ts, te, QUICK)
        assert report.model == "lstm"
        assert len(report.rows) == len(prices.close) - 64
        for day, truth, pred in report.rows:
            assert ts <= day <= te
            assert truth > 0 and np.isfinite(pred)

    def test_daily_refit_differs_from_fit_once(self):
        prices, _ = synthetic_pair(seed=7)
        ts, te = prices.date[64], prices.date[70]
        once = backtest("arima", prices, None, ts, te, refit="once")
        daily = backtest("arima", prices, None, ts, te, refit="daily")
        assert once.rows != daily.rows


class TestSynthetic:
    def test_zero_drivers_constant_price(self):
        prices, _ = generate_synthetic(SyntheticScenario(length=60, beta=0.0, sigma=0.0))
        assert all(c == 100.0 for c in prices.close)

    def test_noiseless_coupling_signs(self):
        prices, sent = generate_synthetic(
            SyntheticScenario(length=100, beta=0.05, sigma=0.0, seed=9)
        )
        for t in range(len(prices.close) - 1):
            delta = prices.close[t + 1] - prices.close[t]
            assert np.sign(delta) == np.sign(sent.score[t])

    def test_same_seed_identical(self):
        a = generate_synthetic(SyntheticScenario(length=60, beta=0.1, sigma=0.02, seed=5))
        b = generate_synthetic(SyntheticScenario(length=60, beta=0.1, sigma=0.02, seed=5))
        assert a == b

    def test_different_seed_differs(self):
        a = generate_synthetic(SyntheticScenario(length=60, sigma=0.02, seed=5))
        b = generate_synthetic(SyntheticScenario(length=60, sigma=0.02, seed=6))
        assert a != b

    def test_ohlc_shape(self):
        prices, sent = generate_synthetic(
            SyntheticScenario(length=60, beta=0.05, sigma=0.02, seed=3)
        )
        assert prices.open[0] == 100.0
        for t in range(1, 60):
            assert prices.open[t] == prices.close[t - 1]
            assert prices.high[t] == max(prices.open[t], prices.close[t])
            assert prices.low[t] == min(prices.open[t], prices.close[t])
        assert all(-0.5 <= s <= 0.5 for s in sent.score)
        assert sent.count == (1,) * 60

    def test_length_validated(self):
        with pytest.raises(DataError, match="at least 60"):
            SyntheticScenario(length=10)

    def test_sigma_validated(self):
        with pytest.raises(DataError, match="sigma"):
            SyntheticScenario(length=60, sigma=-0.1)
