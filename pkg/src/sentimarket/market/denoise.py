"""Wavelet soft-threshold denoising of close prices, scored by SNR and RMSE."""
from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass

import numpy as np

from ..errors import DataError
from .prices import DENOISED, PriceSeries
from .wavelet import WAVELET_NAME, wavelet_forward, wavelet_inverse

_MAD_TO_SIGMA = 0.6745


@dataclass(frozen=True)
class DenoiseReport:
    snr_db: float
    rmse: float
    levels: int
    wavelet_name: str
    threshold_rule: str

    def __post_init__(self):
        if self.rmse < 0.0:
            raise DataError("rmse cannot be negative")
        if math.isfinite(self.snr_db) != (self.rmse > 0.0):
            raise DataError("snr_db must be finite exactly when rmse > 0")

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)


def rmse(reference, estimate) -> float:
    x = np.asarray(reference, dtype=float)
    xhat = np.asarray(estimate, dtype=float)
    if x.shape != xhat.shape:
        raise DataError("rmse operands differ in length")
    return float(np.sqrt(np.mean((x - xhat) ** 2)))


def snr_db(reference, estimate) -> float:
    """Signal-to-noise ratio in decibels of estimate against reference.

    10*log10(sum x^2 / sum (x - xhat)^2); +inf when the estimate is exact.
    """
    x = np.asarray(reference, dtype=float)
    xhat = np.asarray(estimate, dtype=float)
    if x.shape != xhat.shape:
        raise DataError("snr operands differ in length")
    noise = float(np.sum((x - xhat) ** 2))
    if noise == 0.0:
        return math.inf
    return 10.0 * math.log10(float(np.sum(x**2)) / noise)


def soft_threshold(values: np.ndarray, threshold: float) -> np.ndarray:
    return np.sign(values) * np.maximum(np.abs(values) - threshold, 0.0)


def denoise_values(values, levels: int = 3, threshold_scale: float = 1.0) -> tuple[np.ndarray, DenoiseReport]:
    """Universal-threshold soft denoising of a single series.

    The noise scale is the median absolute deviation of the finest
    detail band over 0.6745; the threshold is scale * sigma * sqrt(2 ln N).
    A scale of 0 short-circuits to the exact identity.
    """
    x = np.asarray(values, dtype=float)
    if threshold_scale < 0.0:
        raise DataError(f"threshold scale must be nonnegative, got {threshold_scale}")
    rule = f"universal-soft(scale={threshold_scale:g})"
    if threshold_scale == 0.0:
        report = DenoiseReport(
            snr_db=math.inf, rmse=0.0, levels=levels,
            wavelet_name=WAVELET_NAME, threshold_rule=rule,
        )
        return x.copy(), report
    pyramid = wavelet_forward(x, levels)
    sigma = float(np.median(np.abs(pyramid.details[0]))) / _MAD_TO_SIGMA
    lam = threshold_scale * sigma * math.sqrt(2.0 * math.log(len(x)))
    thresholded = pyramid.__class__(
        approx=pyramid.approx,
        details=tuple(soft_threshold(d, lam) for d in pyramid.details),
        lengths=pyramid.lengths,
        wavelet_name=pyramid.wavelet_name,
    )
    xhat = wavelet_inverse(thresholded)
    report = DenoiseReport(
        snr_db=snr_db(x, xhat), rmse=rmse(x, xhat), levels=levels,
        wavelet_name=WAVELET_NAME, threshold_rule=rule,
    )
    return xhat, report


def denoise(series: PriceSeries, levels: int = 3, threshold_scale: float = 1.0) -> tuple[PriceSeries, DenoiseReport]:
    """Denoise the close column; other columns pass through unchanged."""
    xhat, report = denoise_values(series.close, levels, threshold_scale)
    return series.with_close(xhat.tolist(), DENOISED), report
