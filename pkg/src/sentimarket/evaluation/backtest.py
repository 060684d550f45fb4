"""Walk-forward backtesting over a fixed test date range."""
from __future__ import annotations

from datetime import date
from typing import Optional

import numpy as np

from ..errors import DataError
from ..forecast.baselines import arima_fit, arima_fit_forecast, arima_forecast
from ..forecast.training import WINDOW, TrainConfig, build_features, fit, predict
from ..market.prices import PriceSeries
from ..sentiment.series import SentimentSeries
from .metrics import EvaluationReport, build_report

MODEL_KINDS = ("lstm", "s-lstm", "arima", "persistence")
REFIT_MODES = ("once", "daily")


def _slice(series: PriceSeries, stop: int) -> PriceSeries:
    return PriceSeries(
        date=series.date[:stop],
        open=series.open[:stop],
        high=series.high[:stop],
        low=series.low[:stop],
        close=series.close[:stop],
        volume=series.volume[:stop],
        provenance=series.provenance[:stop],
    )


def backtest(
    kind: str,
    series: PriceSeries,
    sentiment: Optional[SentimentSeries],
    test_start: date,
    test_end: date,
    config: TrainConfig = TrainConfig(),
    order: tuple[int, int, int] = (5, 1, 0),
    refit: str = "once",
) -> EvaluationReport:
    """Predict each test day from data strictly before it; score the run.

    The default fits one model on all pre-range data; refit="daily"
    refits before every prediction.
    """
    if kind not in MODEL_KINDS:
        raise DataError(f"unknown model kind {kind!r}; choose from {MODEL_KINDS}")
    if refit not in REFIT_MODES:
        raise DataError(f"unknown refit mode {refit!r}; choose from {REFIT_MODES}")
    if kind == "s-lstm" and sentiment is None:
        raise DataError("s-lstm requires a sentiment series")
    if test_end < test_start:
        raise DataError("empty test range: end precedes start")
    if test_end < series.date[0] or test_start > series.date[-1]:
        raise DataError(
            f"test range [{test_start.isoformat()}, {test_end.isoformat()}] "
            "lies outside the data"
        )

    test_indices = [
        i for i, d in enumerate(series.date) if test_start <= d <= test_end
    ]
    if not test_indices:
        raise DataError("empty test range: no series dates inside it")
    first = test_indices[0]
    if first < WINDOW + 1:
        raise DataError(
            "test range starts too early: need a 3-day window and a prior close"
        )

    closes = np.asarray(series.close, dtype=float)
    used_sentiment = sentiment if kind == "s-lstm" else None
    predictions: list[float] = []

    if kind in ("lstm", "s-lstm"):
        features = build_features(series, used_sentiment)
        model = None
        for i in test_indices:
            if model is None or refit == "daily":
                model = fit(_slice(series, i if refit == "daily" else first),
                            used_sentiment, config)
            predictions.append(predict(model, features[i - WINDOW : i]))
    elif kind == "arima":
        if refit == "daily":
            predictions = [
                arima_fit_forecast(closes[:i], order) for i in test_indices
            ]
        else:
            fitted = arima_fit(closes[:first], order)
            predictions = [
                arima_forecast(closes[:i], fitted) for i in test_indices
            ]
    else:
        predictions = [float(closes[i - 1]) for i in test_indices]

    rows = [
        (series.date[i], float(closes[i]), predictions[k])
        for k, i in enumerate(test_indices)
    ]
    previous = [float(closes[i - 1]) for i in test_indices]
    return build_report(kind, rows, previous)
