"""LSTM/S-LSTM forecasting with exact BPTT, plus closed-form baselines."""

from .baselines import (
    ArimaFit,
    arima_fit,
    arima_fit_forecast,
    arima_forecast,
    persistence_forecast,
)
from .lstm import (
    LstmParameters,
    LstmState,
    forward_batch,
    init_parameters,
    loss_and_gradients,
    lstm_step,
)
from .training import (
    KIND_LSTM,
    KIND_SLSTM,
    MIN_WINDOWS,
    WINDOW,
    ForecastModel,
    Scaler,
    TrainConfig,
    build_features,
    build_windows,
    fit,
    predict,
)

__all__ = [
    "LstmParameters",
    "LstmState",
    "lstm_step",
    "forward_batch",
    "loss_and_gradients",
    "init_parameters",
    "TrainConfig",
    "Scaler",
    "ForecastModel",
    "fit",
    "predict",
    "build_features",
    "build_windows",
    "WINDOW",
    "MIN_WINDOWS",
    "KIND_LSTM",
    "KIND_SLSTM",
    "ArimaFit",
    "arima_fit",
    "arima_forecast",
    "arima_fit_forecast",
    "persistence_forecast",
]
