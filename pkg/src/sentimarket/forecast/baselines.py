"""Closed-form baselines: autoregressive OLS forecasting and persistence."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import DataError


@dataclass(frozen=True)
class ArimaFit:
    """AR coefficients fitted by least squares on the differenced series."""

    order: tuple[int, int, int]
    intercept: float
    coefficients: tuple[float, ...]


def _difference(values: np.ndarray, d: int) -> np.ndarray:
    for _ in range(d):
        values = np.diff(values)
    return values


def arima_fit(series, order: tuple[int, int, int] = (5, 1, 0)) -> ArimaFit:
    p, d, q = order
    if p < 1 or d < 0 or q != 0:
        raise DataError(
            f"unsupported order {order}: need p >= 1, d >= 0, q = 0 "
            "(moving-average terms are out of scope)"
        )
    values = np.asarray(series, dtype=float)
    if len(values) <= p + d + 10:
        raise DataError(
            f"series too short for order {order}: {len(values)} points"
        )
    if not np.all(np.isfinite(values)):
        raise DataError("degenerate series: non-finite values")

    y = _difference(values, d)
    rows = len(y) - p
    design = np.empty((rows, p + 1))
    design[:, 0] = 1.0
    for lag in range(1, p + 1):
        design[:, lag] = y[p - lag : p - lag + rows]
    target = y[p:]
    try:
        solution, *_ = np.linalg.lstsq(design, target, rcond=None)
    except np.linalg.LinAlgError:
        raise DataError("degenerate series") from None
    if not np.all(np.isfinite(solution)):
        raise DataError("degenerate series")
    return ArimaFit(
        order=(p, d, q),
        intercept=float(solution[0]),
        coefficients=tuple(float(c) for c in solution[1:]),
    )


def arima_forecast(series, fit: ArimaFit) -> float:
    """One-step forecast from a fit, re-integrated to the original scale."""
    p, d, _ = fit.order
    values = np.asarray(series, dtype=float)
    y = _difference(values, d)
    if len(y) < p:
        raise DataError("series too short to forecast from")
    lags = y[-p:][::-1]
    step = fit.intercept + float(np.dot(fit.coefficients, lags))
    # integrate back: add the forecasted d-th difference onto the last
    # value of each lower difference level
    for level in range(d - 1, -1, -1):
        step += _difference(values, level)[-1]
    return step


def arima_fit_forecast(series, order: tuple[int, int, int] = (5, 1, 0)) -> float:
    return arima_forecast(series, arima_fit(series, order))


def persistence_forecast(series) -> float:
    values = np.asarray(series, dtype=float)
    if len(values) == 0:
        raise DataError("cannot forecast from an empty series")
    return float(values[-1])
