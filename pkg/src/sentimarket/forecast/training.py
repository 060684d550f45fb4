"""Window building, standardization, Adam training, model serialization."""
from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass
from datetime import date
from typing import Optional

import numpy as np

from ..errors import DataError
from ..market.prices import PriceSeries
from ..sentiment.series import SentimentSeries
from .lstm import (
    PARAM_FIELDS,
    LstmParameters,
    forward_batch,
    init_parameters,
    loss_and_gradients,
)

WINDOW = 3
MIN_WINDOWS = 20

KIND_LSTM = "lstm"
KIND_SLSTM = "s-lstm"

_ADAM_BETA1 = 0.9
_ADAM_BETA2 = 0.999
_ADAM_EPS = 1e-8

_FORMAT_VERSION = 1


@dataclass(frozen=True)
class TrainConfig:
    epochs: int = 200
    hidden: int = 16
    learning_rate: float = 0.01
    seed: int = 1
    clip_norm: float = 5.0
    split: float = 0.8
    # predict next-day log-return instead of the close level; predictions
    # are mapped back to a close either way
    returns_mode: bool = False

    def __post_init__(self):
        for name in ("epochs", "hidden", "learning_rate", "seed", "clip_norm", "split"):
            if getattr(self, name) <= 0:
                raise DataError(f"config field {name} must be positive")
        if not 0.0 < self.split < 1.0:
            raise DataError("split must be inside (0, 1)")


@dataclass(frozen=True)
class Scaler:
    """Per-channel affine standardizer frozen from train-split statistics."""

    mean: tuple[float, ...]
    std: tuple[float, ...]

    def __post_init__(self):
        if len(self.mean) != len(self.std):
            raise DataError("scaler mean/std length mismatch")
        if any(s <= 0 or not math.isfinite(s) for s in self.std):
            raise DataError("scaler std must be positive and finite")

    def transform(self, values: np.ndarray) -> np.ndarray:
        return (values - np.asarray(self.mean)) / np.asarray(self.std)

    def inverse(self, values: np.ndarray) -> np.ndarray:
        return values * np.asarray(self.std) + np.asarray(self.mean)


@dataclass(frozen=True)
class ForecastModel:
    """Trained handle: parameters plus the scalers that defined its inputs."""

    kind: str
    params: LstmParameters
    feature_scaler: Scaler
    target_scaler: Scaler
    config: TrainConfig
    final_train_loss: float
    first_train_loss: float

    @property
    def feature_dim(self) -> int:
        return self.params.input_size

    def to_json(self) -> str:
        payload = {
            "format_version": _FORMAT_VERSION,
            "kind": self.kind,
            "config": asdict(self.config),
            "feature_scaler": {"mean": self.feature_scaler.mean, "std": self.feature_scaler.std},
            "target_scaler": {"mean": self.target_scaler.mean, "std": self.target_scaler.std},
            "first_train_loss": self.first_train_loss,
            "final_train_loss": self.final_train_loss,
            "params": {
                name: np.asarray(getattr(self.params, name), dtype=float).tolist()
                for name in PARAM_FIELDS
            },
        }
        return json.dumps(payload, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "ForecastModel":
        try:
            payload = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DataError(f"model file is not valid JSON: {exc}") from None
        if payload.get("format_version") != _FORMAT_VERSION:
            raise DataError(
                f"unsupported model format version {payload.get('format_version')!r}"
            )
        try:
            raw = payload["params"]
            arrays = {}
            for name in PARAM_FIELDS:
                value = raw[name]
                arrays[name] = (
                    float(value) if name == "readout_b" else np.asarray(value, dtype=float)
                )
            return cls(
                kind=payload["kind"],
                params=LstmParameters(**arrays),
                feature_scaler=Scaler(
                    mean=tuple(payload["feature_scaler"]["mean"]),
                    std=tuple(payload["feature_scaler"]["std"]),
                ),
                target_scaler=Scaler(
                    mean=tuple(payload["target_scaler"]["mean"]),
                    std=tuple(payload["target_scaler"]["std"]),
                ),
                config=TrainConfig(**payload["config"]),
                first_train_loss=float(payload["first_train_loss"]),
                final_train_loss=float(payload["final_train_loss"]),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise DataError(f"malformed model file: {exc}") from None


def _sentiment_by_date(sentiment: SentimentSeries) -> dict[date, float]:
    if not sentiment.centered:
        raise DataError("sentiment must be centered before fitting")
    return sentiment.daily_scores()


def build_features(
    series: PriceSeries, sentiment: Optional[SentimentSeries]
) -> np.ndarray:
    """[days, channels] matrix: close, plus centered sentiment when fused."""
    if not series.is_contiguous():
        raise DataError("price series has calendar gaps; fill the calendar first")
    close = np.asarray(series.close, dtype=float)
    if sentiment is None:
        return close[:, None]
    scores = _sentiment_by_date(sentiment)
    missing = [d.isoformat() for d in series.date if d not in scores]
    if missing:
        raise DataError(
            "sentiment misaligned, missing dates: " + ", ".join(missing)
        )
    sent = np.array([scores[d] for d in series.date], dtype=float)
    return np.column_stack([close, sent])


def build_windows(features: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """All 3-day input windows with next-day close targets."""
    days = features.shape[0]
    if days <= WINDOW:
        raise DataError("series too short: no complete windows")
    inputs = np.stack([features[t - WINDOW : t] for t in range(WINDOW, days)])
    targets = features[WINDOW:, 0]
    return inputs, targets


def _global_norm(grads: LstmParameters) -> float:
    total = 0.0
    for _, value in grads.items():
        total += float(np.sum(value**2))
    return math.sqrt(total)


def fit(
    series: PriceSeries,
    sentiment: Optional[SentimentSeries],
    config: TrainConfig = TrainConfig(),
) -> ForecastModel:
    """Train on all windows of the series; deterministic in (data, config)."""
    features = build_features(series, sentiment)
    inputs, targets = build_windows(features)
    if len(inputs) < MIN_WINDOWS:
        raise DataError(
            f"series too short: {len(inputs)} windows, need at least {MIN_WINDOWS}"
        )

    if config.returns_mode:
        prev_close = inputs[:, -1, 0]
        if np.any(prev_close <= 0) or np.any(targets <= 0):
            raise DataError("returns mode requires strictly positive closes")
        targets = np.log(targets / prev_close)

    n_train = max(1, int(len(inputs) * config.split))
    train_x, train_y = inputs[:n_train], targets[:n_train]

    channels = features.shape[1]
    flat = train_x.reshape(-1, channels)
    feature_scaler = Scaler(
        mean=tuple(float(v) for v in flat.mean(axis=0)),
        std=tuple(max(float(v), 1e-12) for v in flat.std(axis=0)),
    )
    target_scaler = Scaler(
        mean=(float(train_y.mean()),),
        std=(max(float(train_y.std()), 1e-12),),
    )
    x = feature_scaler.transform(train_x)
    y = target_scaler.transform(train_y[:, None])[:, 0]

    params = init_parameters(config.hidden, channels, config.seed)
    arrays = {name: np.array(value, dtype=float) for name, value in params.items()}
    arrays["readout_b"] = float(params.readout_b)
    moment1 = {name: np.zeros_like(np.atleast_1d(v)) for name, v in arrays.items()}
    moment2 = {name: np.zeros_like(np.atleast_1d(v)) for name, v in arrays.items()}

    first_loss = math.nan
    loss = math.nan
    for epoch in range(1, config.epochs + 1):
        params = LstmParameters(**arrays)
        loss, grads = loss_and_gradients(params, x, y)
        if epoch == 1:
            first_loss = loss
        norm = _global_norm(grads)
        scale = config.clip_norm / norm if norm > config.clip_norm else 1.0
        for name in PARAM_FIELDS:
            g = np.atleast_1d(np.asarray(getattr(grads, name), dtype=float)) * scale
            moment1[name] = _ADAM_BETA1 * moment1[name] + (1 - _ADAM_BETA1) * g
            moment2[name] = _ADAM_BETA2 * moment2[name] + (1 - _ADAM_BETA2) * g**2
            m_hat = moment1[name] / (1 - _ADAM_BETA1**epoch)
            v_hat = moment2[name] / (1 - _ADAM_BETA2**epoch)
            step = config.learning_rate * m_hat / (np.sqrt(v_hat) + _ADAM_EPS)
            if name == "readout_b":
                arrays[name] = float(arrays[name] - step[0])
            else:
                arrays[name] = arrays[name] - step

    return ForecastModel(
        kind=KIND_SLSTM if sentiment is not None else KIND_LSTM,
        params=LstmParameters(**arrays),
        feature_scaler=feature_scaler,
        target_scaler=target_scaler,
        config=config,
        first_train_loss=first_loss,
        final_train_loss=loss,
    )


def predict(model: ForecastModel, recent: np.ndarray) -> float:
    """Next-day close from the trailing [3, features] window."""
    recent = np.asarray(recent, dtype=float)
    if recent.shape != (WINDOW, model.feature_dim):
        raise DataError(
            f"recent window has shape {recent.shape}, expected ({WINDOW}, {model.feature_dim})"
        )
    x = model.feature_scaler.transform(recent)[None, :, :]
    standardized = forward_batch(model.params, x)[0]
    value = float(model.target_scaler.inverse(np.array([standardized]))[0])
    if model.config.returns_mode:
        return float(recent[-1, 0]) * math.exp(value)
    return value
