"""Seeded synthetic price/sentiment generator with a known coupling.

Sentiment is iid uniform(-0.5, 0.5); the next day's log return is
beta * sentiment_t plus Gaussian noise. With beta > 0 the sentiment
series genuinely leads price, giving an oracle for fusion experiments;
with beta = 0 the price is a pure random walk.
"""
from __future__ import annotations

from dataclasses import dataclass
from datetime import date, datetime, timedelta, timezone

import numpy as np

from ..errors import DataError
from ..market.prices import OBSERVED, PriceSeries
from ..sentiment.series import BUCKET_DAILY, SentimentSeries

_START = date(2020, 1, 1)
_BASE_PRICE = 100.0
_VOLUME = 1000.0
MIN_LENGTH = 60


@dataclass(frozen=True)
class SyntheticScenario:
    length: int
    beta: float = 0.0
    sigma: float = 0.0
    seed: int = 1

    def __post_init__(self):
        if self.length < MIN_LENGTH:
            raise DataError(f"length must be at least {MIN_LENGTH}, got {self.length}")
        if self.sigma < 0.0:
            raise DataError("sigma cannot be negative")


def generate_synthetic(scenario: SyntheticScenario) -> tuple[PriceSeries, SentimentSeries]:
    rng = np.random.default_rng(scenario.seed)
    n = scenario.length
    sentiment = rng.uniform(-0.5, 0.5, size=n)
    noise = rng.normal(0.0, scenario.sigma, size=n) if scenario.sigma > 0 else np.zeros(n)

    close = np.empty(n)
    close[0] = _BASE_PRICE
    for t in range(1, n):
        log_return = scenario.beta * sentiment[t - 1] + noise[t]
        close[t] = close[t - 1] * np.exp(log_return)

    opens = np.empty(n)
    opens[0] = _BASE_PRICE
    opens[1:] = close[:-1]
    highs = np.maximum(opens, close)
    lows = np.minimum(opens, close)

    days = tuple(_START + timedelta(days=i) for i in range(n))
    prices = PriceSeries(
        date=days,
        open=tuple(opens.tolist()),
        high=tuple(highs.tolist()),
        low=tuple(lows.tolist()),
        close=tuple(close.tolist()),
        volume=(_VOLUME,) * n,
        provenance=(OBSERVED,) * n,
    )
    series = SentimentSeries(
        bucket_start=tuple(
            datetime(d.year, d.month, d.day, tzinfo=timezone.utc) for d in days
        ),
        score=tuple(sentiment.tolist()),
        count=(1,) * n,
        bucket=BUCKET_DAILY,
    )
    return prices, series
